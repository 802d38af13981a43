function shout(msg) {
  print(msg);
  print(msg);
  return true;
}
shout("ok");
shout(511);
