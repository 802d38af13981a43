class Scaler {
  apply(v) {
    let scaled = v * 4;
    return scaled;
  }
}
let sc = new Scaler();
let base = 16;
print(sc.apply(base));
