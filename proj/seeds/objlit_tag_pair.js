let head = { id: 1, tag: "a", next: 2 };
let tail = { id: 2, tag: "b", next: 0 };
print(head.next);
print(tail.id);
print(head.tag);
