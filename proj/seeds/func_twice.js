function twice(n) {
  let m = n * 2;
  return m;
}
let pair = { lo: 16, hi: 32 };
print(twice(pair.lo));
print(twice(pair.hi));
