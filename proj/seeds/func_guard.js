function guard(v) {
  if (v == null) {
    return 0;
  }
  let bumped = v + 1;
  return bumped;
}
print(guard(null));
print(guard(16));
