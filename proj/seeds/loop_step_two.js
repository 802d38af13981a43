let marks = 0;
for (let i = 0; i < 8; i = i + 2) {
  marks = marks + 1;
}
print(marks);
