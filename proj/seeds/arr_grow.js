let bag = [];
bag.push(2);
bag.push(4);
bag.push(8);
print(bag.length);
print(bag[1]);
