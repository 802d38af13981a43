let pair = { lo: 16, hi: 512 };
let tmp = pair.lo;
pair.lo = pair.hi;
pair.hi = tmp;
print(pair.lo);
print(pair.hi);
