let sw = { state: false, flips: 0, max: 8 };
sw.state = !sw.state;
sw.flips = sw.flips + 1;
sw.state = !sw.state;
sw.flips = sw.flips + 1;
print(sw.flips);
print(sw.state);
