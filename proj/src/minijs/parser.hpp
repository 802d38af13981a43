#pragma once

#include <memory>

#include "tokfuzz/token.hpp"

#include "ast.hpp"

namespace minijs {

struct ParseOutcome {
  bool ok = false;
  size_t error_index = 0;  // token index of the failure
  std::string error_msg;
  std::unique_ptr<Ast> ast;
};

// Recursive descent over the token stream; fires a probe at every
// production entry and for every consumed token kind. Total: bounded
// depth, every path either consumes a token or fails.
ParseOutcome parse(const tokfuzz::TokenSeq& toks);

}  // namespace minijs
