let acc = { total: 0, step: 5 };
let i = 0;
while (i < 3) {
  acc.total = acc.total + acc.step;
  i = i + 1;
}
print(acc.total);
