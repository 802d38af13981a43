let buf = [4, 8];
for (let i = 0; i < 2; i = i + 1) {
  buf.shift();
  buf.unshift(9);
}
print(buf[0]);
print(buf[1]);
