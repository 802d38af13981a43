let tag = "x";
if (tag == "x") {
  print(1);
}
if (tag != "a") {
  print(2);
}
