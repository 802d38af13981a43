#pragma once

#include <cstddef>
#include <cstdint>

namespace minijs {

// Planted assertions. Compiled in unconditionally; disarm() turns each
// firing site into a no-op so the surrounding behavior stays benign.
enum BugId : uint16_t {
  BUG_SYNTAX_ASSIGN = 1,  // '=' accepted inside an object literal
  BUG_CONST_REDEF = 2,    // const redefinition miscounts function slots
  BUG_TRAILING_EXPR = 3,  // number literal directly after a call
  BUG_GC_SHIFT = 4,       // alternating shift/unshift free-list check
};

struct BugFired {
  uint16_t id;
};

void disarm_bugs();
bool bugs_armed();

// Throws BugFired{id} when the condition holds and bugs are armed.
void planted(BugId id, bool fired);

struct BugInfo {
  uint16_t id;
  const char* name;
  const char* description;
};
const BugInfo* bug_table(size_t* count);

}  // namespace minijs
