let v = 1;
for (let i = 0; i < 4; i = i + 1) {
  v = v * 2;
}
print(v);
