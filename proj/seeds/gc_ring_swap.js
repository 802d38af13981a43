let ring = [1, 2, 3];
for (let i = 0; i < 3; i = i + 1) {
  ring.shift();
  ring.unshift(5);
}
print(ring.length);
print(ring[0]);
