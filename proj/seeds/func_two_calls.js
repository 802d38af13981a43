function first(n) {
  let f = n + 2;
  return f;
}
function second(n) {
  let s = n * 4;
  return s;
}
let a = first(8);
let b = second(a);
print(b);
