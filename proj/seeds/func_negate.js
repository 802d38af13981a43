function negate(v) {
  let flipped = -v;
  return flipped;
}
let big = 32768;
print(negate(big));
