#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

namespace minijs {

enum class NK : uint8_t {
  Program,
  Block,
  VarDecl,   // op = DeclKind, str = name, kids = {init?}
  FuncDecl,  // str = name, kids = {body...}; params/slot counts attached
  FuncExpr,
  ClassDecl,  // str = name, kids = methods (FuncDecl nodes)
  If,         // kids = {cond, then, else?}
  While,      // kids = {cond, body}
  For,        // kids = {init, cond, step, body}; Empty nodes when omitted
  Return,     // kids = {value?}
  ExprStmt,
  Empty,
  Assign,     // kids = {target, value}
  Cond,       // kids = {cond, then, else}
  Or,
  And,
  Binary,     // op = BinOp
  Unary,      // op = UnOp, kids = {operand}
  PostIncDec, // op = '+' or '-', kids = {target}
  Call,       // kids = {callee, args...}; flag = trailing-number pattern
  New,        // str = callee name, kids = args
  Member,     // str = property name, kids = {object}
  Index,      // kids = {object, index}
  Ident,      // str = name
  Number,     // num
  Str,        // str = decoded value
  Bool,       // op = 0/1
  Null,
  ArrayLit,   // kids = elements
  ObjectLit,  // kids = Prop nodes
  Prop,       // str = key, kids = {value}; flag = corrupted tag
};

enum class BinOp : uint8_t {
  Add, Sub, Mul, Div, Mod, Lt, Gt, Le, Ge, EqLoose, NeLoose, EqStrict,
};

enum class UnOp : uint8_t { Neg, Pos, Not, Typeof, Delete };

enum class DeclKind : uint8_t { Let, Const, Var };

struct Node {
  NK kind;
  uint8_t op = 0;
  bool flag = false;
  double num = 0;
  std::string str;
  std::vector<Node*> kids;
  std::vector<std::string> params;  // FuncDecl/FuncExpr
  // Slot bookkeeping for function bodies; see BUG_CONST_REDEF.
  uint32_t expected_slots = 0;
  uint32_t distinct_slots = 0;
};

struct Ast {
  std::deque<Node> nodes;
  Node* root = nullptr;

  Node* make(NK kind) {
    nodes.emplace_back();
    nodes.back().kind = kind;
    return &nodes.back();
  }
};

}  // namespace minijs
