function choose(flag, a, b) {
  if (flag) {
    return a;
  }
  return b;
}
print(choose(true, 7, 9));
print(choose(false, 7, 9));
