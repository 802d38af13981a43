let vals = [1, 3, 5, 7];
let sum = 0;
for (let i = 0; i < vals.length; i = i + 1) {
  sum = sum + vals[i];
}
print(sum);
