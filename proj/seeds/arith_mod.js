let q = 65 % 8;
let h = 64 / 16;
if (q != h) {
  print(q);
}
print(h);
