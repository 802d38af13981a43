function mixer(seed) {
  var left = seed * 3;
  var right = seed + 15;
  return left + right;
}
print(mixer(4));
