function add(a, b) {
  let t = a + b;
  return t;
}
let r = add(4, 8);
print(r);
