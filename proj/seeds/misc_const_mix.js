const BASE = 8192;
function lift(v) {
  let raised = v + BASE;
  return raised;
}
print(lift(8191));
