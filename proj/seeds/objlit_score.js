function tally(base, bonus) {
  let score = { base: base, bonus: bonus, penalty: 0 };
  score.penalty = 3;
  return score.base + score.bonus - score.penalty;
}
print(tally(100, 28));
print(tally(50, 5));
