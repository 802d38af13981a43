let a = 0;
let b = 9;
while (a < 3 && b > 0) {
  a = a + 1;
  b = b - 2;
}
print(a);
print(b);
