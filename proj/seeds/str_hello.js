let s = "hello";
print(s.length);
print(s[0]);
print(s[4]);
