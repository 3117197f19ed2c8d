#pragma once

#include <string>
#include <vector>

#include "gzero/error.hpp"
#include "gzero/universe.hpp"

namespace gzero::dsl {

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line, column;
};

enum class NodeKind {
  Number,    // 3 or 3/4
  Ident,
  Interval,  // [a..b], (-inf..b], [a..inf)
  Call,      // name(args)
  Braced,    // name{items} or {items} when text is empty
  List,      // [a, b]
  Pair,      // (a, b)
  Entry,     // key:value inside braces
  Labeled,   // label=value or label:value inside a call
  Binary,    // text is the operator
  Negate,
};

struct Node {
  NodeKind kind = NodeKind::Ident;
  std::string text;
  Interval iv{};
  std::vector<Node> kids;
  int line = 0, column = 0;

  /// Structural equality; positions are ignored.
  friend bool operator==(const Node& a, const Node& b);
};

enum class StatementKind { Let, Universe, Query };

struct Statement {
  StatementKind kind = StatementKind::Query;
  std::string name;  // bound name or query verb
  std::vector<Node> args;
  bool check = false;  // query written as `check verb ...`
  int line = 0, column = 0;
  friend bool operator==(const Statement& a, const Statement& b);
};

/// Number of arguments taken by each query verb, or -1 for an unknown verb.
int queryArity(const std::string& verb);
const std::vector<std::string>& queryVerbs();

/// Parse a whole program: one statement per line, `#` comments.
std::vector<Statement> parse(const std::string& text);
Node parseExpression(const std::string& text);

std::string print(const Node& n);
std::string print(const Statement& s);
std::string print(const std::vector<Statement>& program);

}  // namespace gzero::dsl
