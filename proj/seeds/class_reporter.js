class Reporter {
  emit(tag) {
    print(tag);
    return true;
  }
}
let rep = new Reporter();
rep.emit("ok");
rep.emit(33);
