let stack = [5];
stack.push(7);
stack.push(9);
let top = stack.pop();
print(top);
print(stack.length);
