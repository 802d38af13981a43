function report(v) {
  let doubled = v * 2;
  print(doubled);
  return doubled;
}
let seen = report(31);
print(seen);
