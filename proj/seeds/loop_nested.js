let hits = 0;
for (let i = 0; i < 2; i = i + 1) {
  for (let j = 0; j < 2; j = j + 1) {
    hits = hits + 1;
  }
}
print(hits);
