let left = 5;
while (left > 0) {
  left = left - 1;
}
print(left);
