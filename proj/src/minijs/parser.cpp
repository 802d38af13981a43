#include "parser.hpp"

#include <cstdlib>
#include <set>

#include "bugs.hpp"
#include "probes.hpp"

namespace minijs {

using tokfuzz::Token;
using tokfuzz::TokenKind;
using tokfuzz::TokenSeq;

namespace {

constexpr int kMaxDepth = 200;

struct ParseSig {
  size_t index;
  std::string msg;
};

std::string decode_string_literal(const std::string& text) {
  // text includes the surrounding quotes
  std::string out;
  for (size_t i = 1; i + 1 < text.size(); i++) {
    char c = text[i];
    if (c == '\\' && i + 2 < text.size()) {
      i++;
      switch (text[i]) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case '0': out += '\0'; break;
        default: out += text[i];
      }
    } else {
      out += c;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const TokenSeq& toks) : toks_(toks) {
    ast_ = std::make_unique<Ast>();
  }

  std::unique_ptr<Ast> run() {
    ast_->root = parse_program();
    return std::move(ast_);
  }

 private:
  const TokenSeq& toks_;
  size_t pos_ = 0;
  int depth_ = 0;
  int fn_depth_ = 0;
  std::unique_ptr<Ast> ast_;

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.err("nesting too deep");
    }
    ~DepthGuard() { p.depth_--; }
  };

  [[noreturn]] void err(const std::string& msg) { throw ParseSig{pos_, msg}; }

  bool eof() const { return pos_ >= toks_.size(); }
  const Token& cur() {
    if (eof()) err("unexpected end of input");
    return toks_[pos_];
  }
  bool at_punct(const char* text) {
    return !eof() && toks_[pos_].kind == TokenKind::punctuator &&
           toks_[pos_].text == text;
  }
  bool at_keyword(const char* text) {
    return !eof() && toks_[pos_].kind == TokenKind::keyword &&
           toks_[pos_].text == text;
  }
  bool at_kind(TokenKind k) { return !eof() && toks_[pos_].kind == k; }

  const Token& advance() {
    const Token& t = cur();
    // Lexical feedback: keywords and punctuators get per-text sites,
    // open-ended kinds share one site each.
    switch (t.kind) {
      case TokenKind::keyword:
      case TokenKind::punctuator:
        probe(fnv1a(("tok/" + t.text).c_str()));
        break;
      case TokenKind::identifier: MJS_PROBE("tok/ident"); break;
      case TokenKind::number_literal: MJS_PROBE("tok/number"); break;
      case TokenKind::string_literal: MJS_PROBE("tok/string"); break;
    }
    pos_++;
    return t;
  }

  void expect_punct(const char* text) {
    if (!at_punct(text)) err(std::string("expected '") + text + "'");
    advance();
  }

  std::string expect_ident() {
    if (!at_kind(TokenKind::identifier)) err("expected identifier");
    return advance().text;
  }

  Node* parse_program() {
    MJS_PROBE("parse/program");
    Node* n = ast_->make(NK::Program);
    while (!eof()) n->kids.push_back(parse_statement());
    return n;
  }

  Node* parse_statement() {
    MJS_PROBE("parse/statement");
    DepthGuard g(*this);
    if (at_punct("{")) return parse_block();
    if (at_keyword("let") || at_keyword("const") || at_keyword("var")) {
      Node* d = parse_var_decl();
      expect_punct(";");
      return d;
    }
    if (at_keyword("function")) return parse_function(NK::FuncDecl, true);
    if (at_keyword("class")) return parse_class();
    if (at_keyword("if")) return parse_if();
    if (at_keyword("while")) return parse_while();
    if (at_keyword("for")) return parse_for();
    if (at_keyword("return")) return parse_return();
    if (at_punct(";")) {
      MJS_PROBE("parse/empty");
      advance();
      return ast_->make(NK::Empty);
    }
    Node* n = ast_->make(NK::ExprStmt);
    n->kids.push_back(parse_expr());
    expect_punct(";");
    return n;
  }

  Node* parse_block() {
    MJS_PROBE("parse/block");
    DepthGuard g(*this);
    expect_punct("{");
    Node* n = ast_->make(NK::Block);
    while (!at_punct("}")) {
      if (eof()) err("unterminated block");
      n->kids.push_back(parse_statement());
    }
    advance();
    return n;
  }

  Node* parse_var_decl() {
    MJS_PROBE("parse/var_decl");
    const Token& kw = advance();
    Node* n = ast_->make(NK::VarDecl);
    n->op = static_cast<uint8_t>(kw.text == "const"  ? DeclKind::Const
                                 : kw.text == "var" ? DeclKind::Var
                                                    : DeclKind::Let);
    n->str = expect_ident();
    if (at_punct("=")) {
      advance();
      n->kids.push_back(parse_assign());
    }
    return n;
  }

  Node* parse_function(NK kind, bool named) {
    MJS_PROBE("parse/function");
    DepthGuard g(*this);
    advance();  // function
    Node* n = ast_->make(kind);
    if (named || at_kind(TokenKind::identifier)) n->str = expect_ident();
    expect_punct("(");
    while (!at_punct(")")) {
      if (!n->params.empty()) expect_punct(",");
      n->params.push_back(expect_ident());
    }
    advance();
    fn_depth_++;
    Node* body = parse_block();
    fn_depth_--;
    n->kids = body->kids;
    count_slots(n);
    return n;
  }

  Node* parse_class() {
    MJS_PROBE("parse/class");
    DepthGuard g(*this);
    advance();  // class
    Node* n = ast_->make(NK::ClassDecl);
    n->str = expect_ident();
    expect_punct("{");
    while (!at_punct("}")) {
      if (eof()) err("unterminated class body");
      MJS_PROBE("parse/method");
      Node* m = ast_->make(NK::FuncDecl);
      m->str = expect_ident();
      expect_punct("(");
      while (!at_punct(")")) {
        if (!m->params.empty()) expect_punct(",");
        m->params.push_back(expect_ident());
      }
      advance();
      fn_depth_++;
      Node* body = parse_block();
      fn_depth_--;
      m->kids = body->kids;
      count_slots(m);
      n->kids.push_back(m);
    }
    advance();
    return n;
  }

  // Declared-slot pre-pass for a function body. A const redeclaration of a
  // name this pass has already seen still bumps the expected count; the
  // allocator dedupes, and the call-time check compares the two.
  void count_slots(Node* fn) {
    std::set<std::string> seen;
    uint32_t expected = 0;
    auto walk = [&](auto&& self, Node* n) -> void {
      if (n->kind == NK::FuncDecl || n->kind == NK::FuncExpr ||
          n->kind == NK::ClassDecl)
        return;
      if (n->kind == NK::VarDecl) {
        bool dup = seen.count(n->str) > 0;
        if (!dup) {
          seen.insert(n->str);
          expected++;
        } else if (static_cast<DeclKind>(n->op) == DeclKind::Const) {
          // The redeclaration check was dropped for const on this path;
          // the slot counter still reserves a slot. See BUG_CONST_REDEF.
          MJS_PROBE("parse/const_redef");
          expected++;
        } else {
          MJS_PROBE("parse/dup_decl");
        }
      }
      for (Node* k : n->kids) self(self, k);
    };
    for (Node* k : fn->kids) walk(walk, k);
    fn->expected_slots = expected;
    fn->distinct_slots = static_cast<uint32_t>(seen.size());
  }

  Node* parse_if() {
    MJS_PROBE("parse/if");
    DepthGuard g(*this);
    advance();
    expect_punct("(");
    Node* n = ast_->make(NK::If);
    n->kids.push_back(parse_expr());
    expect_punct(")");
    n->kids.push_back(parse_statement());
    if (at_keyword("else")) {
      advance();
      n->kids.push_back(parse_statement());
    }
    return n;
  }

  Node* parse_while() {
    MJS_PROBE("parse/while");
    DepthGuard g(*this);
    advance();
    expect_punct("(");
    Node* n = ast_->make(NK::While);
    n->kids.push_back(parse_expr());
    expect_punct(")");
    n->kids.push_back(parse_statement());
    return n;
  }

  Node* parse_for() {
    MJS_PROBE("parse/for");
    DepthGuard g(*this);
    advance();
    expect_punct("(");
    Node* n = ast_->make(NK::For);
    if (at_punct(";")) {
      n->kids.push_back(ast_->make(NK::Empty));
    } else if (at_keyword("let") || at_keyword("const") || at_keyword("var")) {
      n->kids.push_back(parse_var_decl());
    } else {
      Node* e = ast_->make(NK::ExprStmt);
      e->kids.push_back(parse_expr());
      n->kids.push_back(e);
    }
    expect_punct(";");
    n->kids.push_back(at_punct(";") ? ast_->make(NK::Empty) : parse_expr());
    expect_punct(";");
    n->kids.push_back(at_punct(")") ? ast_->make(NK::Empty) : parse_expr());
    expect_punct(")");
    n->kids.push_back(parse_statement());
    return n;
  }

  Node* parse_return() {
    MJS_PROBE("parse/return");
    advance();
    Node* n = ast_->make(NK::Return);
    if (!at_punct(";")) n->kids.push_back(parse_expr());
    expect_punct(";");
    return n;
  }

  Node* parse_expr() {
    MJS_PROBE("parse/expr");
    DepthGuard g(*this);
    return parse_assign();
  }

  Node* parse_assign() {
    DepthGuard g(*this);
    Node* lhs = parse_cond();
    if (at_punct("=")) {
      MJS_PROBE("parse/assign");
      if (lhs->kind != NK::Ident && lhs->kind != NK::Member &&
          lhs->kind != NK::Index)
        err("bad assignment target");
      advance();
      Node* n = ast_->make(NK::Assign);
      n->kids = {lhs, parse_assign()};
      return n;
    }
    return lhs;
  }

  Node* parse_cond() {
    Node* c = parse_or();
    if (at_punct("?")) {
      MJS_PROBE("parse/cond");
      DepthGuard g(*this);
      advance();
      Node* n = ast_->make(NK::Cond);
      Node* then = parse_assign();
      expect_punct(":");
      n->kids = {c, then, parse_assign()};
      return n;
    }
    return c;
  }

  Node* parse_or() {
    Node* lhs = parse_and();
    while (at_punct("||")) {
      MJS_PROBE("parse/or");
      advance();
      Node* n = ast_->make(NK::Or);
      n->kids = {lhs, parse_and()};
      lhs = n;
    }
    return lhs;
  }

  Node* parse_and() {
    Node* lhs = parse_equality();
    while (at_punct("&&")) {
      MJS_PROBE("parse/and");
      advance();
      Node* n = ast_->make(NK::And);
      n->kids = {lhs, parse_equality()};
      lhs = n;
    }
    return lhs;
  }

  Node* binary(Node* lhs, BinOp op, Node* rhs) {
    Node* n = ast_->make(NK::Binary);
    n->op = static_cast<uint8_t>(op);
    n->kids = {lhs, rhs};
    return n;
  }

  Node* parse_equality() {
    Node* lhs = parse_relational();
    for (;;) {
      if (at_punct("==")) {
        MJS_PROBE("parse/eq");
        advance();
        lhs = binary(lhs, BinOp::EqLoose, parse_relational());
      } else if (at_punct("!=")) {
        MJS_PROBE("parse/ne");
        advance();
        lhs = binary(lhs, BinOp::NeLoose, parse_relational());
      } else if (at_punct("===")) {
        MJS_PROBE("parse/eq_strict");
        advance();
        lhs = binary(lhs, BinOp::EqStrict, parse_relational());
      } else {
        return lhs;
      }
    }
  }

  Node* parse_relational() {
    Node* lhs = parse_additive();
    for (;;) {
      BinOp op;
      if (at_punct("<")) op = BinOp::Lt;
      else if (at_punct(">")) op = BinOp::Gt;
      else if (at_punct("<=")) op = BinOp::Le;
      else if (at_punct(">=")) op = BinOp::Ge;
      else return lhs;
      MJS_PROBE("parse/relational");
      advance();
      lhs = binary(lhs, op, parse_additive());
    }
  }

  Node* parse_additive() {
    Node* lhs = parse_multiplicative();
    for (;;) {
      BinOp op;
      if (at_punct("+")) op = BinOp::Add;
      else if (at_punct("-")) op = BinOp::Sub;
      else return lhs;
      MJS_PROBE("parse/additive");
      advance();
      lhs = binary(lhs, op, parse_multiplicative());
    }
  }

  Node* parse_multiplicative() {
    Node* lhs = parse_unary();
    for (;;) {
      BinOp op;
      if (at_punct("*")) op = BinOp::Mul;
      else if (at_punct("/")) op = BinOp::Div;
      else if (at_punct("%")) op = BinOp::Mod;
      else return lhs;
      MJS_PROBE("parse/multiplicative");
      advance();
      lhs = binary(lhs, op, parse_unary());
    }
  }

  Node* unary(UnOp op, Node* operand) {
    Node* n = ast_->make(NK::Unary);
    n->op = static_cast<uint8_t>(op);
    n->kids = {operand};
    return n;
  }

  Node* parse_unary() {
    DepthGuard g(*this);
    if (at_punct("!")) {
      MJS_PROBE("parse/not");
      advance();
      return unary(UnOp::Not, parse_unary());
    }
    if (at_punct("-")) {
      MJS_PROBE("parse/neg");
      advance();
      return unary(UnOp::Neg, parse_unary());
    }
    if (at_punct("+")) {
      MJS_PROBE("parse/pos");
      advance();
      return unary(UnOp::Pos, parse_unary());
    }
    if (at_keyword("typeof")) {
      MJS_PROBE("parse/typeof");
      advance();
      return unary(UnOp::Typeof, parse_unary());
    }
    if (at_keyword("delete")) {
      MJS_PROBE("parse/delete");
      advance();
      return unary(UnOp::Delete, parse_unary());
    }
    return parse_postfix();
  }

  Node* parse_postfix() {
    DepthGuard g(*this);
    Node* e = parse_primary();
    for (;;) {
      if (at_punct("(")) {
        MJS_PROBE("parse/call");
        advance();
        Node* n = ast_->make(NK::Call);
        n->kids.push_back(e);
        while (!at_punct(")")) {
          if (n->kids.size() > 1) expect_punct(",");
          n->kids.push_back(parse_assign());
        }
        advance();
        // Number literals straight after the argument list have no
        // operator to attach to; the recovery path swallows the run
        // silently (no consume probes) and folds the count into the
        // call's operand index. See BUG_TRAILING_EXPR.
        uint32_t trailing = 0;
        while (at_kind(TokenKind::number_literal) && trailing < 255) {
          pos_++;
          trailing++;
        }
        if (trailing >= 2) {
          MJS_PROBE("parse/trailing_multi");
          n->flag = true;
          n->op = static_cast<uint8_t>(trailing);
        }
        e = n;
      } else if (at_punct(".")) {
        MJS_PROBE("parse/member");
        advance();
        Node* n = ast_->make(NK::Member);
        n->str = expect_ident();
        n->kids.push_back(e);
        e = n;
      } else if (at_punct("[")) {
        MJS_PROBE("parse/index");
        advance();
        Node* n = ast_->make(NK::Index);
        n->kids.push_back(e);
        n->kids.push_back(parse_expr());
        expect_punct("]");
        e = n;
      } else if (at_punct("++") || at_punct("--")) {
        MJS_PROBE("parse/postincdec");
        Node* n = ast_->make(NK::PostIncDec);
        n->op = toks_[pos_].text[0] == '+' ? '+' : '-';
        advance();
        if (e->kind != NK::Ident && e->kind != NK::Member &&
            e->kind != NK::Index)
          err("bad increment target");
        n->kids.push_back(e);
        e = n;
      } else {
        return e;
      }
    }
  }

  Node* parse_primary() {
    MJS_PROBE("parse/primary");
    DepthGuard g(*this);
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::number_literal: {
        MJS_PROBE("parse/number");
        Node* n = ast_->make(NK::Number);
        n->num = std::strtod(t.text.c_str(), nullptr);
        advance();
        return n;
      }
      case TokenKind::string_literal: {
        MJS_PROBE("parse/string");
        Node* n = ast_->make(NK::Str);
        n->str = decode_string_literal(t.text);
        advance();
        return n;
      }
      case TokenKind::identifier: {
        MJS_PROBE("parse/ident");
        Node* n = ast_->make(NK::Ident);
        n->str = t.text;
        advance();
        return n;
      }
      case TokenKind::keyword:
        if (t.text == "true" || t.text == "false") {
          MJS_PROBE("parse/bool");
          Node* n = ast_->make(NK::Bool);
          n->op = t.text == "true" ? 1 : 0;
          advance();
          return n;
        }
        if (t.text == "null") {
          MJS_PROBE("parse/null");
          advance();
          return ast_->make(NK::Null);
        }
        if (t.text == "function") return parse_function(NK::FuncExpr, false);
        if (t.text == "new") {
          MJS_PROBE("parse/new");
          advance();
          Node* n = ast_->make(NK::New);
          n->str = expect_ident();
          expect_punct("(");
          while (!at_punct(")")) {
            if (!n->kids.empty()) expect_punct(",");
            n->kids.push_back(parse_assign());
          }
          advance();
          return n;
        }
        err("unexpected keyword '" + t.text + "'");
      case TokenKind::punctuator:
        if (t.text == "(") {
          MJS_PROBE("parse/paren");
          advance();
          Node* e = parse_expr();
          expect_punct(")");
          return e;
        }
        if (t.text == "[") {
          MJS_PROBE("parse/array_lit");
          advance();
          Node* n = ast_->make(NK::ArrayLit);
          while (!at_punct("]")) {
            if (!n->kids.empty()) expect_punct(",");
            n->kids.push_back(parse_assign());
          }
          advance();
          return n;
        }
        if (t.text == "{") return parse_object_literal();
        err("unexpected token '" + t.text + "'");
    }
    err("unexpected token");
  }

  Node* parse_object_literal() {
    MJS_PROBE("parse/object_lit");
    if (fn_depth_ > 0) MJS_PROBE("parse/objlit_in_function");
    DepthGuard g(*this);
    advance();  // {
    Node* n = ast_->make(NK::ObjectLit);
    while (!at_punct("}")) {
      if (!n->kids.empty()) expect_punct(",");
      MJS_PROBE("parse/prop");
      Node* p = ast_->make(NK::Prop);
      const Token& key = cur();
      if (key.kind == TokenKind::identifier ||
          key.kind == TokenKind::number_literal) {
        p->str = key.text;
      } else if (key.kind == TokenKind::string_literal) {
        p->str = decode_string_literal(key.text);
      } else {
        err("expected property key");
      }
      advance();
      if (at_punct("=")) {
        // Mis-accepted assignment form. The property keeps a corrupted
        // tag that the evaluator's check trips over. See BUG_SYNTAX_ASSIGN.
        MJS_PROBE("parse/objlit_assign");
        p->flag = true;
        advance();
      } else {
        expect_punct(":");
      }
      p->kids.push_back(parse_assign());
      n->kids.push_back(p);
    }
    advance();
    return n;
  }
};

}  // namespace

ParseOutcome parse(const TokenSeq& toks) {
  ParseOutcome out;
  Parser p(toks);
  try {
    out.ast = p.run();
    out.ok = true;
  } catch (const ParseSig& sig) {
    MJS_PROBE("parse/error");
    out.ok = false;
    out.error_index = sig.index;
    out.error_msg = sig.msg;
  }
  return out;
}

}  // namespace minijs
