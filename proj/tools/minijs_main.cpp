// MiniJS interpreter binary: file runner plus protocol server.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "../src/minijs/bugs.hpp"
#include "../src/minijs/interp.hpp"
#include "../src/minijs/serve.hpp"

namespace {

int usage() {
  std::fprintf(stderr,
               "usage: minijs [--disarm] [--step-limit N] run FILE\n"
               "       minijs [--disarm] serve\n"
               "       minijs --list-bugs\n");
  return 64;
}

int list_bugs() {
  size_t count = 0;
  const minijs::BugInfo* bugs = minijs::bug_table(&count);
  for (size_t i = 0; i < count; i++)
    std::printf("%u\t%s\t%s\n", bugs[i].id, bugs[i].name, bugs[i].description);
  return 0;
}

int run_file(const char* path, const minijs::EvalLimits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "minijs: cannot open %s\n", path);
    return 66;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string out;
  minijs::RunResult res = minijs::run_program(buf.str(), limits, &out);
  std::fputs(out.c_str(), stdout);
  if (res.status == minijs::ExecStatus::crash)
    std::fprintf(stderr, "status: crash assertion=%u\n", res.assertion_id);
  else if (!res.message.empty())
    std::fprintf(stderr, "status: %s (%s)\n", minijs::status_name(res.status),
                 res.message.c_str());
  else
    std::fprintf(stderr, "status: %s\n", minijs::status_name(res.status));
  return static_cast<int>(res.status);
}

}  // namespace

int main(int argc, char** argv) {
  minijs::EvalLimits limits;
  const char* mode = nullptr;
  const char* file = nullptr;
  for (int i = 1; i < argc; i++) {
    const char* a = argv[i];
    if (std::strcmp(a, "--disarm") == 0) {
      minijs::disarm_bugs();
    } else if (std::strcmp(a, "--list-bugs") == 0) {
      return list_bugs();
    } else if (std::strcmp(a, "--step-limit") == 0 && i + 1 < argc) {
      limits.max_steps = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strcmp(a, "serve") == 0 || std::strcmp(a, "run") == 0) {
      mode = a;
      if (std::strcmp(a, "run") == 0) {
        if (i + 1 >= argc) return usage();
        file = argv[++i];
      }
    } else {
      return usage();
    }
  }
  if (!mode) return usage();
  if (std::strcmp(mode, "serve") == 0) return minijs::serve();
  return run_file(file, limits);
}
