let rec = { count: 0, step: 2, cap: 32 };
rec.count = rec.count + rec.step;
rec.count = rec.count + rec.step;
print(rec.count);
print(rec.cap);
