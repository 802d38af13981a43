let item = { name: "a", kind: "b", rank: 5 };
print(item.name);
print(item.rank);
item.rank = item.rank - 1;
print(item.rank);
