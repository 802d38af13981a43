let acc = 0;
acc = acc + 127;
acc = acc - 63;
acc = acc * 2;
print(acc);
