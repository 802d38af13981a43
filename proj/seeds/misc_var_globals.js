var legacy = 2048;
var extra = 4095;
legacy = legacy + extra;
print(legacy);
var done = true;
print(done);
