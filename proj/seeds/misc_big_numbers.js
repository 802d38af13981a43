let near = 32767;
let exact = 65536;
let under = 65535;
print(exact - under);
print(near + 1);
