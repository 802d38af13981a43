function describe(v) {
  let kind = typeof v;
  print(kind);
  return kind;
}
describe(8);
describe("a");
describe(null);
