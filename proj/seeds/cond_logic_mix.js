let hot = true;
let wet = false;
if (hot && !wet) {
  print(1);
}
if (hot || wet) {
  print(2);
}
