let left = [1, 2];
let right = [3, 4];
for (let i = 0; i < 2; i = i + 1) {
  left.shift();
  left.unshift(5);
  right.shift();
  right.unshift(7);
}
print(left[0]);
print(right[0]);
