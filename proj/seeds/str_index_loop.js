let word = "ok";
for (let i = 0; i < word.length; i = i + 1) {
  print(word[i]);
}
