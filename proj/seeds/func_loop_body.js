function spin(times) {
  let count = 0;
  while (count < times) {
    count = count + 1;
  }
  return count;
}
print(spin(3));
