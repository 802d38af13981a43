let grid = { rows: 3, cols: 4, fill: 0 };
let cells = grid.rows * grid.cols;
print(cells);
grid.fill = cells;
print(grid.fill);
