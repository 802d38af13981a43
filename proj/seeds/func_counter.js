function bump(state) {
  state.n = state.n + 1;
  return state.n;
}
let holder = { n: 0 };
bump(holder);
bump(holder);
print(holder.n);
