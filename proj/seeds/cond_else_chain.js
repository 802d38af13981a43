let gear = 3;
if (gear > 4) {
  print(1);
} else {
  if (gear > 2) {
    print(2);
  } else {
    print(3);
  }
}
