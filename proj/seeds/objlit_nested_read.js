let box = { w: 8, h: 9, tag: 3 };
let wide = box.w > box.h;
print(wide);
let total = box.w + box.h + box.tag;
print(total);
