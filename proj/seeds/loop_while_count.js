let w = 0;
while (w < 3) {
  w = w + 1;
}
print(w);
