let x = 255;
let y = 256;
print(x < y);
print(x >= y);
print(x == 255);
