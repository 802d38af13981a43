#include "tokfuzz/executor.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/mman.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstring>

#include "tokfuzz/errors.hpp"

namespace tokfuzz {

namespace {

constexpr size_t kTrailerSize = sizeof(uint64_t);

std::atomic<uint32_t> g_shm_seq{0};

void put_u32(uint8_t* p, uint32_t v) {
  p[0] = static_cast<uint8_t>(v);
  p[1] = static_cast<uint8_t>(v >> 8);
  p[2] = static_cast<uint8_t>(v >> 16);
  p[3] = static_cast<uint8_t>(v >> 24);
}

uint32_t get_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint64_t now_micros() {
  return static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

// Reads exactly n bytes with an absolute deadline. Returns false on timeout,
// throws ProtocolError on channel breakage.
bool read_deadline(int fd, uint8_t* buf, size_t n, uint64_t deadline_micros) {
  size_t got = 0;
  while (got < n) {
    uint64_t now = now_micros();
    if (now >= deadline_micros) return false;
    struct pollfd pfd {fd, POLLIN, 0};
    int timeout_ms = static_cast<int>((deadline_micros - now) / 1000) + 1;
    int pr = poll(&pfd, 1, timeout_ms);
    if (pr == 0) return false;
    if (pr < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError("poll failed on target channel");
    }
    ssize_t r = read(fd, buf + got, n - got);
    if (r <= 0) throw ProtocolError("target channel closed mid-response");
    got += static_cast<size_t>(r);
  }
  return true;
}

}  // namespace

const char* exec_status_name(ExecStatus s) {
  switch (s) {
    case ExecStatus::parse_ok: return "parse_ok";
    case ExecStatus::parse_error: return "parse_error";
    case ExecStatus::runtime_error: return "runtime_error";
    case ExecStatus::crash: return "crash";
    case ExecStatus::timeout: return "timeout";
  }
  return "unknown";
}

Executor::Executor(const TargetConfig& config, uint32_t expected_map_size)
    : config_(config), map_size_(expected_map_size) {
  signal(SIGPIPE, SIG_IGN);
  char name[64];
  std::snprintf(name, sizeof(name), "/tokfuzz_%d_%u", getpid(),
                g_shm_seq.fetch_add(1));
  shm_name_ = name;
  int fd = shm_open(shm_name_.c_str(), O_CREAT | O_RDWR | O_EXCL, 0600);
  if (fd < 0) throw SpawnFailure("shm_open failed for " + shm_name_);
  size_t total = map_size_ + kTrailerSize;
  if (ftruncate(fd, static_cast<off_t>(total)) != 0) {
    close(fd);
    shm_unlink(shm_name_.c_str());
    throw SpawnFailure("ftruncate failed for " + shm_name_);
  }
  void* mem = mmap(nullptr, total, PROT_READ | PROT_WRITE, MAP_SHARED, fd, 0);
  close(fd);
  if (mem == MAP_FAILED) {
    shm_unlink(shm_name_.c_str());
    throw SpawnFailure("mmap failed for " + shm_name_);
  }
  region_ = static_cast<uint8_t*>(mem);
  spawn();
}

Executor::~Executor() {
  kill_child();
  if (region_) munmap(region_, map_size_ + kTrailerSize);
  if (!shm_name_.empty()) shm_unlink(shm_name_.c_str());
}

void Executor::reap() {
  if (child_pid_ > 0) {
    int st = 0;
    waitpid(child_pid_, &st, 0);
    child_pid_ = -1;
  }
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  to_child_ = from_child_ = -1;
  alive_ = false;
}

void Executor::kill_child() {
  if (child_pid_ > 0) kill(child_pid_, SIGKILL);
  reap();
}

void Executor::spawn() {
  if (child_pid_ > 0) kill_child();
  int to_pipe[2], from_pipe[2];
  if (pipe(to_pipe) != 0) throw SpawnFailure("pipe failed");
  if (pipe(from_pipe) != 0) {
    close(to_pipe[0]);
    close(to_pipe[1]);
    throw SpawnFailure("pipe failed");
  }
  int pid = fork();
  if (pid < 0) {
    for (int fd : {to_pipe[0], to_pipe[1], from_pipe[0], from_pipe[1]})
      close(fd);
    throw SpawnFailure("fork failed");
  }
  if (pid == 0) {
    dup2(to_pipe[0], 0);
    dup2(from_pipe[1], 1);
    for (int fd : {to_pipe[0], to_pipe[1], from_pipe[0], from_pipe[1]})
      close(fd);
    if (config_.memory_limit > 0) {
      struct rlimit rl;
      rl.rlim_cur = rl.rlim_max = config_.memory_limit;
      setrlimit(RLIMIT_AS, &rl);
    }
    setenv("TOKFUZZ_SHM", shm_name_.c_str(), 1);
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>(config_.target_path.c_str()));
    for (const std::string& a : config_.args)
      argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    execv(config_.target_path.c_str(), argv.data());
    _exit(127);
  }
  child_pid_ = pid;
  to_child_ = to_pipe[1];
  from_child_ = from_pipe[0];
  close(to_pipe[0]);
  close(from_pipe[1]);

  uint8_t hello[12];
  try {
    if (!read_deadline(from_child_, hello, sizeof(hello),
                       now_micros() + 5'000'000)) {
      kill_child();
      throw SpawnFailure("target did not complete the handshake");
    }
  } catch (const ProtocolError&) {
    kill_child();
    throw SpawnFailure("target exited before the handshake");
  }
  if (std::memcmp(hello, "HELO", 4) != 0) {
    kill_child();
    throw SpawnFailure("bad handshake magic from target");
  }
  uint32_t version = get_u32(hello + 4);
  uint32_t announced = get_u32(hello + 8);
  if (version != 1 || announced != map_size_) {
    kill_child();
    throw HandshakeMismatch("target announced version " +
                            std::to_string(version) + ", map size " +
                            std::to_string(announced) + "; expected 1/" +
                            std::to_string(map_size_));
  }
  alive_ = true;
}

ExecResult Executor::run_input(const EncodedInput& input, const TokenMap& map) {
  return run_text(decode(input, map));
}

ExecResult Executor::run_text(const std::string& program) {
  if (!alive_) {
    spawn();
    respawns_++;
  }
  std::memset(region_, 0, map_size_ + kTrailerSize);

  uint64_t start = now_micros();
  uint8_t head[8];
  std::memcpy(head, "EXEC", 4);
  put_u32(head + 4, static_cast<uint32_t>(program.size()));
  bool wrote = true;
  if (write(to_child_, head, sizeof(head)) != static_cast<ssize_t>(sizeof(head)))
    wrote = false;
  if (wrote && !program.empty() &&
      write(to_child_, program.data(), program.size()) !=
          static_cast<ssize_t>(program.size()))
    wrote = false;
  if (!wrote) {
    kill_child();
    throw ProtocolError("target rejected the request frame");
  }

  uint8_t stat[7];
  bool ok;
  try {
    ok = read_deadline(from_child_, stat, sizeof(stat),
                       start + static_cast<uint64_t>(config_.timeout_ms) * 1000);
  } catch (const ProtocolError&) {
    kill_child();
    throw;
  }
  ExecResult res;
  res.trace = region_;
  res.trace_size = map_size_;
  res.exec_micros = now_micros() - start;
  if (!ok) {
    kill_child();
    res.status = ExecStatus::timeout;
    return res;
  }
  if (std::memcmp(stat, "STAT", 4) != 0 || stat[4] > 4) {
    kill_child();
    throw ProtocolError("malformed response frame from target");
  }
  res.status = static_cast<ExecStatus>(stat[4]);
  res.assertion_id =
      static_cast<uint16_t>(stat[5]) | static_cast<uint16_t>(stat[6]) << 8;
  std::memcpy(&res.exec_cost, region_ + map_size_, sizeof(uint64_t));
  if (res.status == ExecStatus::crash) {
    // The target exits after reporting an assertion; start fresh next run.
    reap();
  } else if (!config_.persistent) {
    kill_child();
  }
  return res;
}

}  // namespace tokfuzz
