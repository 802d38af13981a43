let cells = [0, 0, 0, 0];
cells[0] = 16;
cells[3] = 64;
print(cells[0] + cells[3]);
print(cells.length);
