let fuel = 2;
while (fuel > 0) fuel = fuel - 1;
if (fuel == 0) 7;
print(fuel);
