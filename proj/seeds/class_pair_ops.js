class PairOps {
  sum(a, b) {
    let s = a + b;
    return s;
  }
  gap(a, b) {
    let g = a - b;
    return g;
  }
}
let ops = new PairOps();
print(ops.sum(3, 5));
print(ops.gap(9, 2));
