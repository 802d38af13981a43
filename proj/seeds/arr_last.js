let items = [2, 4, 8, 16];
let last = items[items.length - 1];
print(last);
items.pop();
print(items.length);
