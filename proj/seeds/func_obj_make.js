function wrap(v) {
  let w = v + 0;
  return w;
}
let shell = { inner: 129, outer: 257 };
print(wrap(shell.inner));
print(wrap(shell.outer));
