let from = [5, 10];
let to = [0, 0];
to[0] = from[0];
to[1] = from[1];
print(to[0]);
print(to[1]);
