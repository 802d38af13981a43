let lim = { min: 0, max: 4096, cur: 2048 };
if (lim.cur >= lim.min) {
  print(lim.cur);
}
if (lim.cur <= lim.max) {
  print(lim.max);
}
