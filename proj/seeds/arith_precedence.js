let low = 2 + 3 * 4;
let high = (2 + 3) * 4;
print(low);
print(high);
