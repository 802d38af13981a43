function clone_pair(a, b) {
  let src = { a: a, b: b };
  let dst = { a: 0, b: 0 };
  dst.a = src.a;
  dst.b = src.b + src.a;
  return dst.b;
}
print(clone_pair(1, 2));
print(clone_pair(3, 4));
