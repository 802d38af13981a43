function gate(a, b) {
  let both = a && b;
  return both;
}
print(gate(true, false));
print(gate(true, true));
