const LIMIT = 128;
const STEP = 2047;
let used = LIMIT - 1;
print(used);
print(STEP);
