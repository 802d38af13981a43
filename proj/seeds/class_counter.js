class Counter {
  bump(n) {
    let next = n + 1;
    return next;
  }
}
let c = new Counter();
print(c.bump(7));
