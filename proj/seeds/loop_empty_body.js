let k = 0;
for (let i = 0; i < 2; i = i + 1) {
  k = k + i;
}
while (k > 4) {
  k = k - 4;
}
print(k);
