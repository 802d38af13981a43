let steps = { first: 1, second: 2, third: 3, fourth: 4 };
let climb = steps.first + steps.second;
climb = climb + steps.third;
climb = climb + steps.fourth;
print(climb);
