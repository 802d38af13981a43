function clamp(v, cap) {
  if (v > cap) {
    return cap;
  }
  return v;
}
print(clamp(100, 64));
print(clamp(3, 64));
