let track = [5, 9];
let turns = 3;
for (let i = 0; i < turns; i = i + 1) {
  track.shift();
  track.unshift(i);
}
print(track[0]);
print(track.length);
