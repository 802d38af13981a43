let slot = { val: null, used: false, gen: 1 };
if (slot.val == null) {
  print(slot.gen);
}
slot.used = true;
print(slot.used);
