let row = [9];
row.unshift(7);
row.unshift(5);
print(row[0]);
print(row.length);
