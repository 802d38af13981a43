let pool = [7, 7, 7];
let spills = 0;
for (let i = 0; i < 3; i = i + 1) {
  pool.shift();
  pool.unshift(i);
  spills = spills + 1;
}
print(spills);
print(pool[0]);
