let line = [3, 5, 7];
let head = line.shift();
print(head);
print(line.length);
print(line[0]);
