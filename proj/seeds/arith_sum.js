let a = 4;
let b = 8;
let c = a + b;
print(c);
