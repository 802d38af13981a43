let a = "a";
let b = "b";
let joined = a + b;
print(joined);
print(joined.length);
