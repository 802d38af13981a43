let deck = [2, 4, 8];
deck.unshift(1);
deck.shift();
deck.unshift(3);
print(deck[0]);
print(deck.length);
