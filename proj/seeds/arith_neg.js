let n = 16;
let m = -n + 32;
print(m);
let z = -1;
print(z * m);
