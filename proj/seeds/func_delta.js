function delta(a, b) {
  let gap = a - b;
  if (gap < 0) {
    gap = -gap;
  }
  return gap;
}
print(delta(3, 9));
print(delta(9, 3));
