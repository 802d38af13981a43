let flags = { on: true, strict: false, level: 7 };
if (flags.on) {
  print(flags.level);
}
if (!flags.strict) {
  print(1);
}
