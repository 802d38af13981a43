let meta = { size: 3, cap: 8 };
let data = [11, 12, 13];
print(data[meta.size - 1]);
meta.cap = data.length;
print(meta.cap);
