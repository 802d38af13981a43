function accumulate(base) {
  let acc = base;
  for (let i = 0; i < 3; i = i + 1) {
    acc = acc + i;
  }
  return acc;
}
print(accumulate(5));
