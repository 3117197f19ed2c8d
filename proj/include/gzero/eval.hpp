#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gzero/dsl.hpp"
#include "gzero/matrix.hpp"

namespace gzero::dsl {

/// Name resolution or sort error at a source position.
class EvalError : public Error {
 public:
  EvalError(const std::string& msg, const Node& at)
      : Error(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + msg),
        line(at.line),
        column(at.column) {}
  int line, column;
};

enum class Sort { Scalar, Set, Filter, Sum, Matrix };

using Value = std::variant<DivisionScalar, SymSet, ProdSet, Filter, FormalSum, SymMatrix>;
std::string valueStr(const Value& v);

struct QueryResult {
  std::string query;
  std::string verdict;  // yes, no, unknown, value or error
  std::optional<std::string> witness;
  std::string reason;   // why a verdict is unknown, or the error message
  std::optional<std::string> value;
  std::string errorType;
  long elapsedMs = 0;
  bool asserted = false;  // written as `check ...`

  /// Errors always fail; asserted queries fail unless yes or value.
  bool failed() const;
};

Universe universeOf(const Node& n);

/// Evaluates statements against a current universe. `let` binds the
/// expression itself; it is evaluated afresh at each use, in the universe
/// the use site asks for.
class Evaluator {
 public:
  Evaluator() = default;

  const Universe& universe() const { return u_; }
  void setUniverse(const Universe& u) { u_ = u; }

  /// Nullopt for `let` and `universe`.
  std::optional<QueryResult> run(const Statement& s);
  /// Parse and run a program; a syntax error becomes a single error result.
  std::vector<QueryResult> runProgram(const std::string& text);

  Sort sortOf(const Node& n) const;
  Value value(const Node& n, const Universe& u) const;
  DivisionScalar scalar(const Node& n) const;
  Point integer(const Node& n) const;
  SetValue set(const Node& n, const Universe& u) const;
  SymSet lineSet(const Node& n, const Universe& u) const;
  Filter filter(const Node& n, const Universe& u) const;
  FormalSum sum(const Node& n, const Universe& u) const;
  SymMatrix matrix(const Node& n, const Universe& h, const Universe& g) const;
  Factor factor(const Node& n, const Universe& h, const Universe& g) const;

 private:
  const Node& resolve(const Node& n) const;
  QueryResult query(const Statement& s);

  Universe u_ = Universe::intLine();
  std::map<std::string, Node> env_;
};

}  // namespace gzero::dsl
