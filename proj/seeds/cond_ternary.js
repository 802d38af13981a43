let load = 65;
let label = load > 63 ? 1 : 0;
print(label);
let other = load < 63 ? 4 : 5;
print(other);
