function sum3(a, b, c) {
  let partial = a + b;
  let full = partial + c;
  return full;
}
let out = sum3(1, 2, 3);
print(out);
