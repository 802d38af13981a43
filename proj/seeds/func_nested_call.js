function inner(x) {
  let y = x + 1;
  return y;
}
function outer(x) {
  let stage = inner(x);
  let more = inner(stage);
  return more;
}
print(outer(5));
