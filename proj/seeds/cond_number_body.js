let armed = true;
if (armed) 5;
print(armed);
