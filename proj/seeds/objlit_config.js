function make_config(w, h) {
  let cfg = { width: w, height: h, depth: 4 };
  return cfg.width * cfg.height + cfg.depth;
}
print(make_config(63, 31));
print(make_config(8, 8));
