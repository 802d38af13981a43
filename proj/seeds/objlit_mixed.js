let mix = { num: 1024, flag: true, label: "x", span: 2 };
if (mix.flag) {
  print(mix.num);
}
print(mix.label);
print(mix.span * mix.num);
