let clock = { hour: 9, minute: 33, second: 17 };
clock.second = clock.second + 1;
print(clock.second);
let stamp = clock.hour * 64 + clock.minute;
print(stamp);
