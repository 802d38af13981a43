function span(lo, hi) {
  let range = { lo: lo, hi: hi, mid: 127 };
  return range.hi - range.lo;
}
print(span(0, 255));
print(span(16, 64));
