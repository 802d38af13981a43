function sum_point(x, y) {
  let point = { x: x, y: y, z: 16 };
  return point.x + point.y + point.z;
}
print(sum_point(4, 8));
print(sum_point(1, 2));
