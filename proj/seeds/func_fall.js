function fall(steps) {
  let height = 1023;
  let rate = 33;
  height = height - rate * steps;
  return height;
}
print(fall(2));
