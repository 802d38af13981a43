let d = 5;
d--;
print(d);
let u = 9;
u++;
u++;
print(u);
