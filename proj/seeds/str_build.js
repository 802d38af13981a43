let t = String(255);
print(t);
print(t.length);
let u = String(true);
print(u);
