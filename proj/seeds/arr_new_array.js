let grid = new Array(4);
grid[0] = 9;
grid[1] = 17;
print(grid.length);
print(grid[1]);
