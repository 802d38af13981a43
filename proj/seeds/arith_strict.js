let a = 5;
let b = 5;
if (a === b) {
  print(a);
}
if (a != 7) {
  print(b);
}
