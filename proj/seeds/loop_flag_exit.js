let going = true;
let laps = 0;
while (going) {
  laps = laps + 1;
  if (laps >= 3) {
    going = false;
  }
}
print(laps);
