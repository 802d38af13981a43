let odd = 0;
for (let i = 1; i < 8; i = i + 2) {
  odd = odd + i;
}
print(odd);
