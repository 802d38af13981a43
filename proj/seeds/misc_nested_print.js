function halve(v) {
  let h = v / 2;
  return h;
}
print(halve(halve(64)));
let deep = halve(halve(halve(8)));
print(deep);
