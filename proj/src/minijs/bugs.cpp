#include "bugs.hpp"

#include "probes.hpp"

namespace minijs {

namespace {
bool g_armed = true;

const BugInfo kBugs[] = {
    {BUG_SYNTAX_ASSIGN, "BUG_SYNTAX_ASSIGN",
     "'=' accepted in place of ':' inside an object literal corrupts the "
     "property tag; the frame-local tag check fires when the literal is "
     "built during a function call"},
    {BUG_CONST_REDEF, "BUG_CONST_REDEF",
     "const redefinition of an existing binding in a function body "
     "miscounts declared slots; the slot check fires when the function is "
     "called"},
    {BUG_TRAILING_EXPR, "BUG_TRAILING_EXPR",
     "number literals straight after a call's argument list corrupt the "
     "operand index once two or more are swallowed; the bound check fires "
     "when the call is evaluated"},
    {BUG_GC_SHIFT, "BUG_GC_SHIFT",
     "8 or more alternating shift/unshift operations on one array trip the "
     "free-list consistency check"},
};
}  // namespace

void disarm_bugs() { g_armed = false; }
bool bugs_armed() { return g_armed; }

void planted(BugId id, bool fired) {
  if (!fired || !g_armed) return;
  probe(fnv1a("bug/fired") + id);
  throw BugFired{id};
}

const BugInfo* bug_table(size_t* count) {
  *count = sizeof(kBugs) / sizeof(kBugs[0]);
  return kBugs;
}

}  // namespace minijs
