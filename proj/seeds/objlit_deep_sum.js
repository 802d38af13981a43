let left = { a: 7, b: 15 };
let right = { a: 33, b: 65 };
let both = left.a + right.a;
print(both);
print(left.b + right.b);
