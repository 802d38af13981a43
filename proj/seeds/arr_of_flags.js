let bits = [true, false, true];
if (bits[0]) {
  print(1);
}
if (!bits[1]) {
  print(2);
}
print(bits.length);
