let walk = { pos: 0, stride: 3 };
for (let i = 0; i < 3; i = i + 1) {
  walk.pos = walk.pos + walk.stride;
}
print(walk.pos);
