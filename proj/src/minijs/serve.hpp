#pragma once

namespace minijs {

// Protocol server over stdin/stdout. Attaches to the shared coverage
// region named by TOKFUZZ_SHM when set. Returns the process exit code:
// 0 on clean channel close, nonzero on protocol violation.
int serve();

}  // namespace minijs
