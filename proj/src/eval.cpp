#include "gzero/eval.hpp"

#include <chrono>
#include <set>

namespace gzero::dsl {

namespace {

const Universe kLine = Universe::intLine();

const std::set<std::string> kSetHeads{"union", "inter", "compl", "star", "minus", "rect", "stripe",
                                      "cell"};
const std::set<std::string> kFilterHeads{"meet",  "join",   "quot",    "perp",  "istar",
                                         "induced", "tensor", "cofpair", "angle", "times"};
const std::set<std::string> kFilterAtoms{"all", "cof", "dcc", "acc"};
const std::set<std::string> kSumHeads{"pat", "delta", "chi", "row", "col", "reflect", "restrict",
                                      "truncate"};
const std::set<std::string> kMatrixHeads{"outer", "conv", "shift", "unit"};

[[noreturn]] void bad(const std::string& msg, const Node& at) { throw EvalError(msg, at); }

void arity(const Node& n, std::size_t want) {
  if (n.kids.size() != want) {
    bad(n.text + " takes " + std::to_string(want) + " argument" + (want == 1 ? "" : "s"), n);
  }
}

// Value of a Labeled kid with the given label, if present.
const Node* labeled(const Node& n, const std::string& label) {
  for (const auto& k : n.kids) {
    if (k.kind == NodeKind::Labeled && (k.text == label + "=" || k.text == label + ":")) {
      return &k.kids[0];
    }
  }
  return nullptr;
}

std::vector<const Node*> positional(const Node& n) {
  std::vector<const Node*> out;
  for (const auto& k : n.kids) {
    if (k.kind != NodeKind::Labeled) out.push_back(&k);
  }
  return out;
}

const Universe& lineOf(const Universe& u, const Node& at) {
  if (u.isProduct()) bad("expected a one-dimensional universe, have " + u.str(), at);
  return u;
}

const Universe& leftOf(const Universe& u, const Node& at) {
  if (!u.isProduct()) bad("expected a product universe, have " + u.str(), at);
  return u.left();
}

DivisionScalar toKind(const DivisionScalar& v, ScalarKind kind) {
  if (v.kind() == kind) return v;
  if (kind == ScalarKind::Quaternion) return DivisionScalar(v.asQuaternion());
  throw TypeError("quaternion value in a rational context");
}

ScalarKind joinKind(const std::vector<DivisionScalar>& vs) {
  for (const auto& v : vs) {
    if (v.kind() == ScalarKind::Quaternion) return ScalarKind::Quaternion;
  }
  return ScalarKind::Rational;
}

}  // namespace

std::string valueStr(const Value& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

bool QueryResult::failed() const {
  if (verdict == "error") return true;
  return asserted && verdict != "yes" && verdict != "value";
}

Universe universeOf(const Node& n) {
  if (n.kind == NodeKind::Binary && n.text == "x") {
    return Universe::product(universeOf(n.kids[0]), universeOf(n.kids[1]));
  }
  if (n.kind == NodeKind::Ident) {
    if (n.text == "Z") return Universe::intLine();
    if (n.text == "N") return Universe::intHalfLine();
    if (n.text == "Q") Universe::rationals();
  }
  if (n.kind == NodeKind::Call && n.text == "Z") {
    if (n.kids.size() == 1 && n.kids[0].kind == NodeKind::Ident) {
      if (n.kids[0].text == "identity") return Universe::intLine(Involution::Identity);
      if (n.kids[0].text == "negate") return Universe::intLine(Involution::Negate);
    }
    bad("Z takes identity or negate", n);
  }
  if (n.kind == NodeKind::Call && n.text == "finite") {
    auto pos = positional(n);
    bool ordered = true;
    std::optional<std::vector<Point>> perm;
    for (const Node* k : pos) {
      if (k->kind == NodeKind::Ident && k->text == "unordered") ordered = false;
    }
    if (pos.empty() || pos[0]->kind != NodeKind::Number) bad("finite needs a size", n);
    const auto size = static_cast<std::size_t>(std::stoll(pos[0]->text));
    if (const Node* p = labeled(n, "perm")) {
      if (p->kind != NodeKind::List) bad("perm must be a list", *p);
      perm.emplace();
      for (const auto& k : p->kids) {
        if (k.kind != NodeKind::Number) bad("perm entries are indices", k);
        perm->push_back(std::stoll(k.text));
      }
    }
    if (!perm) return Universe::finite(size, ordered);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
    return Universe::finite(labels, *perm, ordered);
  }
  bad("unknown universe " + print(n), n);
}

const Node& Evaluator::resolve(const Node& n) const {
  const Node* cur = &n;
  for (int depth = 0; cur->kind == NodeKind::Ident; ++depth) {
    auto it = env_.find(cur->text);
    if (it == env_.end()) break;
    if (depth > 64) bad("cyclic definition of " + n.text, n);
    cur = &it->second;
  }
  return *cur;
}

Sort Evaluator::sortOf(const Node& raw) const {
  const Node& n = resolve(raw);
  switch (n.kind) {
    case NodeKind::Number: return Sort::Scalar;
    case NodeKind::Interval: return Sort::Set;
    case NodeKind::Negate: return sortOf(n.kids[0]);
    case NodeKind::Binary: {
      if (n.text == "*") {
        for (const auto& k : n.kids) {
          if (sortOf(k) == Sort::Matrix) return Sort::Matrix;
        }
        for (const auto& k : n.kids) {
          if (sortOf(k) == Sort::Sum) return Sort::Sum;
        }
        return Sort::Scalar;
      }
      const Sort a = sortOf(n.kids[0]);
      return a == Sort::Scalar ? sortOf(n.kids[1]) : a;
    }
    case NodeKind::Ident:
      if (kFilterAtoms.count(n.text)) return Sort::Filter;
      if (n.text == "full" || n.text == "empty") return Sort::Set;
      if (n.text == "unit") return Sort::Matrix;
      bad("unknown name '" + n.text + "'", n);
    case NodeKind::Call:
      if (n.text == "q") return Sort::Scalar;
      if (kSetHeads.count(n.text)) return Sort::Set;
      if (kFilterHeads.count(n.text)) return Sort::Filter;
      if (kSumHeads.count(n.text)) return Sort::Sum;
      if (kMatrixHeads.count(n.text)) return Sort::Matrix;
      bad("unknown function '" + n.text + "'", n);
    case NodeKind::Braced:
      if (n.text.empty()) return Sort::Set;
      if (n.text == "principal") return Sort::Filter;
      if (n.text == "fsum") return Sort::Sum;
      if (n.text == "explicit" || n.text == "finitary" || n.text == "sum") return Sort::Matrix;
      bad("unknown form '" + n.text + "{'", n);
    default: break;
  }
  bad("not an expression: " + print(n), n);
}

DivisionScalar Evaluator::scalar(const Node& raw) const {
  const Node& n = resolve(raw);
  switch (n.kind) {
    case NodeKind::Number: {
      Rational r(n.text);
      r.canonicalize();
      return DivisionScalar(r);
    }
    case NodeKind::Negate: return -scalar(n.kids[0]);
    case NodeKind::Binary: {
      const DivisionScalar a = scalar(n.kids[0]), b = scalar(n.kids[1]);
      const ScalarKind k = joinKind({a, b});
      const DivisionScalar x = toKind(a, k), y = toKind(b, k);
      if (n.text == "+") return x + y;
      if (n.text == "-") return x - y;
      if (n.text == "*") return x * y;
      break;
    }
    case NodeKind::Call:
      if (n.text == "q") {
        arity(n, 4);
        Rational c[4];
        for (int i = 0; i < 4; ++i) {
          const DivisionScalar v = scalar(n.kids[i]);
          if (v.kind() != ScalarKind::Rational) bad("quaternion parts are rational", n.kids[i]);
          c[i] = v.rational();
        }
        return DivisionScalar(Quaternion(c[0], c[1], c[2], c[3]));
      }
      break;
    default: break;
  }
  bad("expected a scalar", n);
}

Point Evaluator::integer(const Node& n) const {
  const DivisionScalar v = scalar(n);
  if (v.kind() != ScalarKind::Rational || v.rational().get_den() != 1 ||
      !v.rational().get_num().fits_slong_p()) {
    bad("expected an integer", n);
  }
  return v.rational().get_num().get_si();
}

SymSet Evaluator::lineSet(const Node& n, const Universe& u) const {
  SetValue v = set(n, u);
  if (!std::holds_alternative<SymSet>(v)) bad("expected a one-dimensional set", n);
  return std::get<SymSet>(v);
}

SetValue Evaluator::set(const Node& raw, const Universe& u) const {
  const Node& n = resolve(raw);
  if (n.kind == NodeKind::Interval) return SymSet::interval(lineOf(u, n), n.iv.lo, n.iv.hi);
  if (n.kind == NodeKind::Ident && (n.text == "full" || n.text == "empty")) {
    const bool full = n.text == "full";
    if (u.isProduct()) return full ? ProdSet::full(u) : ProdSet::empty(u);
    return full ? SymSet::full(u) : SymSet::empty(u);
  }
  if (n.kind == NodeKind::Braced && n.text.empty()) {
    if (u.isProduct()) {
      std::vector<std::pair<Point, Point>> pts;
      for (const auto& k : n.kids) {
        if (k.kind != NodeKind::Pair || k.kids.size() != 2) bad("expected a point (h, g)", k);
        pts.emplace_back(integer(k.kids[0]), integer(k.kids[1]));
      }
      return ProdSet::points(u, pts);
    }
    std::vector<Point> pts;
    for (const auto& k : n.kids) pts.push_back(integer(k));
    return SymSet::points(u, pts);
  }
  if (n.kind != NodeKind::Call || !kSetHeads.count(n.text)) bad("expected a set", n);
  const std::string& f = n.text;
  auto fold = [&](auto&& op) -> SetValue {
    if (n.kids.empty()) bad(f + " needs arguments", n);
    SetValue acc = set(n.kids[0], u);
    for (std::size_t i = 1; i < n.kids.size(); ++i) {
      SetValue next = set(n.kids[i], u);
      if (acc.index() != next.index()) bad("mixed set dimensions", n.kids[i]);
      acc = std::visit(
          [&](const auto& a) -> SetValue {
            using T = std::decay_t<decltype(a)>;
            return op(a, std::get<T>(next));
          },
          acc);
    }
    return acc;
  };
  if (f == "union") return fold([](const auto& a, const auto& b) { return unite(a, b); });
  if (f == "inter") return fold([](const auto& a, const auto& b) { return intersect(a, b); });
  if (f == "minus") return fold([](const auto& a, const auto& b) { return minus(a, b); });
  if (f == "compl") {
    arity(n, 1);
    return std::visit([](const auto& a) -> SetValue { return a.complement(); }, set(n.kids[0], u));
  }
  if (f == "star") {
    arity(n, 1);
    return lineSet(n.kids[0], u).star();
  }
  if (f == "rect") {
    arity(n, 2);
    return ProdSet::rect(u, lineSet(n.kids[0], leftOf(u, n)), lineSet(n.kids[1], u.right()));
  }
  if (f == "stripe") {
    arity(n, 2);
    const Node& key = n.kids[0];
    if (key.kind != NodeKind::Ident || (key.text != "s" && key.text != "d")) {
      bad("stripe key is s or d", key);
    }
    leftOf(u, n);
    return ProdSet::stripe(u, key.text == "s" ? StripeKey::Sum : StripeKey::Diff,
                           lineSet(n.kids[1], kLine));
  }
  // cell(h:I, g:I, s:I, d:I); missing constraints are unbounded.
  leftOf(u, n);
  Cell c;
  for (const auto& k : n.kids) {
    if (k.kind != NodeKind::Labeled || k.kids[0].kind != NodeKind::Interval) {
      bad("cell constraints look like h:[a..b]", k);
    }
    const std::string label = k.text.substr(0, k.text.size() - 1);
    const Interval iv = k.kids[0].iv;
    if (label == "h") {
      c.h = iv;
    } else if (label == "g") {
      c.g = iv;
    } else if (label == "s") {
      c.s = iv;
    } else if (label == "d") {
      c.d = iv;
    } else {
      bad("unknown cell coordinate '" + label + "'", k);
    }
  }
  return ProdSet::cell(u, c);
}

Filter Evaluator::filter(const Node& raw, const Universe& u) const {
  const Node& n = resolve(raw);
  if (n.kind == NodeKind::Ident && kFilterAtoms.count(n.text)) {
    if (n.text == "all") return Filter::all(u);
    if (n.text == "cof") return Filter::cof(u);
    if (n.text == "dcc") return Filter::dcc(u);
    return Filter::acc(u);
  }
  if (n.kind == NodeKind::Braced && n.text == "principal") {
    std::vector<SetValue> sets;
    for (const auto& k : n.kids) sets.push_back(set(k, u));
    if (sets.empty()) bad("principal needs a base set", n);
    return Filter::principal(u, sets);
  }
  if (n.kind != NodeKind::Call || !kFilterHeads.count(n.text)) bad("expected a filter", n);
  const std::string& f = n.text;
  if (f == "perp" || f == "istar") {
    arity(n, 1);
    const Filter a = filter(n.kids[0], u);
    return f == "perp" ? perp(a) : star(a);
  }
  arity(n, 2);
  if (f == "induced") return induced(filter(n.kids[0], u), lineSet(n.kids[1], u));
  if (f == "tensor" || f == "cofpair" || f == "angle" || f == "times") {
    const Filter a = filter(n.kids[0], leftOf(u, n)), b = filter(n.kids[1], u.right());
    if (f == "tensor") return tensor(a, b);
    if (f == "cofpair") return cofPair(a, b);
    if (f == "angle") return anglePair(a, b);
    return timesProd(a, b);
  }
  const Filter a = filter(n.kids[0], u), b = filter(n.kids[1], u);
  if (f == "meet") return meet(a, b);
  if (f == "join") return join(a, b);
  return quotient(a, b);
}


FormalSum Evaluator::sum(const Node& raw, const Universe& u) const {
  const Node& n = resolve(raw);
  lineOf(u, n);
  if (n.kind == NodeKind::Negate) return -sum(n.kids[0], u);
  if (n.kind == NodeKind::Binary && (n.text == "+" || n.text == "-")) {
    const FormalSum a = sum(n.kids[0], u), b = sum(n.kids[1], u);
    return n.text == "+" ? a + b : a - b;
  }
  if (n.kind == NodeKind::Binary && n.text == "*") {
    Factor f = factor(n, u, u);
    if (!std::holds_alternative<FormalSum>(f)) bad("product is not a formal sum", n);
    return std::get<FormalSum>(f);
  }
  if (n.kind == NodeKind::Braced && n.text == "fsum") {
    std::map<Point, DivisionScalar> values;
    std::vector<DivisionScalar> all;
    for (const auto& k : n.kids) {
      if (k.kind != NodeKind::Entry) bad("fsum entries look like point:value", k);
      const DivisionScalar v = scalar(k.kids[1]);
      values[integer(k.kids[0])] = v;
      all.push_back(v);
    }
    const ScalarKind kind = joinKind(all);
    for (auto& [p, v] : values) v = toKind(v, kind);
    return FormalSum::fromMap(u, kind, values);
  }
  if (n.kind != NodeKind::Call || !kSumHeads.count(n.text)) bad("expected a formal sum", n);
  const std::string& f = n.text;
  if (f == "pat") {
    auto pos = positional(n);
    if (pos.size() != 2 || pos[0]->kind != NodeKind::Interval || pos[1]->kind != NodeKind::List) {
      bad("pat takes a ray, an optional period and a coefficient list", n);
    }
    std::vector<DivisionScalar> coeffs;
    for (const auto& k : pos[1]->kids) coeffs.push_back(scalar(k));
    if (const Node* p = labeled(n, "period")) {
      if (integer(*p) != static_cast<Point>(coeffs.size())) bad("period differs from the pattern length", *p);
    }
    const ScalarKind kind = joinKind(coeffs);
    for (auto& c : coeffs) c = toKind(c, kind);
    return FormalSum::pattern(u, pos[0]->iv, coeffs);
  }
  if (f == "delta") {
    if (n.kids.empty() || n.kids.size() > 2) bad("delta takes a point and an optional coefficient", n);
    const DivisionScalar k = n.kids.size() == 2 ? scalar(n.kids[1]) : DivisionScalar(1);
    return FormalSum::delta(u, integer(n.kids[0]), k);
  }
  if (f == "chi") {
    arity(n, 1);
    return FormalSum::charFn(lineSet(n.kids[0], u));
  }
  if (f == "restrict" || f == "truncate") {
    arity(n, 2);
    const FormalSum a = sum(n.kids[0], u);
    const SymSet s = lineSet(n.kids[1], u);
    return f == "restrict" ? a.restrict(s) : truncate(a, s);
  }
  arity(n, 1);
  const FormalSum a = sum(n.kids[0], u);
  if (f == "row") return a.asRow();
  if (f == "col") return a.asColumn();
  return a.reflect();
}

SymMatrix Evaluator::matrix(const Node& raw, const Universe& h, const Universe& g) const {
  const Node& n = resolve(raw);
  if (n.kind == NodeKind::Negate) return -matrix(n.kids[0], h, g);
  if (n.kind == NodeKind::Binary && (n.text == "+" || n.text == "-")) {
    const SymMatrix a = matrix(n.kids[0], h, g), b = matrix(n.kids[1], h, g);
    return n.text == "+" ? a + b : a - b;
  }
  if (n.kind == NodeKind::Binary && n.text == "*") {
    Factor f = factor(n, h, g);
    if (!std::holds_alternative<SymMatrix>(f)) bad("product is not a matrix", n);
    return std::get<SymMatrix>(f);
  }
  if ((n.kind == NodeKind::Ident || n.kind == NodeKind::Call) && n.text == "unit") {
    if (!(h == g)) bad("unit needs equal row and column universes", n);
    return SymMatrix::identity(h);
  }
  if (n.kind == NodeKind::Braced && n.text == "explicit") {
    std::map<std::pair<Point, Point>, DivisionScalar> entries;
    std::vector<DivisionScalar> all;
    for (const auto& k : n.kids) {
      if (k.kind != NodeKind::Entry || k.kids[0].kind != NodeKind::Pair || k.kids[0].kids.size() != 2) {
        bad("explicit entries look like (h,g):value", k);
      }
      const DivisionScalar v = scalar(k.kids[1]);
      entries[{integer(k.kids[0].kids[0]), integer(k.kids[0].kids[1])}] = v;
      all.push_back(v);
    }
    const ScalarKind kind = joinKind(all);
    for (auto& [p, v] : entries) v = toKind(v, kind);
    return SymMatrix::explicitMatrix(h, g, kind, entries);
  }
  auto rankOne = [&](const Node& col, const Node& row) {
    return RankOne{sum(col, h), sum(row, g).asRow()};
  };
  if (n.kind == NodeKind::Call && n.text == "outer") {
    arity(n, 2);
    RankOne t = rankOne(n.kids[0], n.kids[1]);
    const ScalarKind kind = t.column.kind();
    return SymMatrix::finitary(h, g, kind, {std::move(t)});
  }
  if (n.kind == NodeKind::Braced && n.text == "finitary") {
    std::vector<RankOne> terms;
    for (const auto& k : n.kids) {
      if (k.kind != NodeKind::Pair || k.kids.size() != 2) bad("finitary terms look like (column, row)", k);
      terms.push_back(rankOne(k.kids[0], k.kids[1]));
    }
    if (terms.empty()) return SymMatrix::explicitMatrix(h, g, ScalarKind::Rational, {});
    const ScalarKind kind = terms.front().column.kind();
    return SymMatrix::finitary(h, g, kind, std::move(terms));
  }
  if (n.kind == NodeKind::Braced && n.text == "sum") {
    if (n.kids.empty()) return SymMatrix::explicitMatrix(h, g, ScalarKind::Rational, {});
    SymMatrix acc = matrix(n.kids[0], h, g);
    for (std::size_t i = 1; i < n.kids.size(); ++i) acc = acc + matrix(n.kids[i], h, g);
    return acc;
  }
  if (n.kind == NodeKind::Call && n.text == "conv") {
    auto pos = positional(n);
    const Node* key = labeled(n, "key");
    if (!key && pos.size() == 2) key = pos[1];
    if (pos.empty() || !key || key->kind != NodeKind::Ident || (key->text != "s" && key->text != "d")) {
      bad("conv takes a kernel and key=s or key=d", n);
    }
    return SymMatrix::convolution(h, g, sum(*pos[0], kLine),
                                  key->text == "s" ? StripeKey::Sum : StripeKey::Diff);
  }
  if (n.kind == NodeKind::Call && n.text == "shift") {
    if (n.kids.empty() || n.kids.size() > 2) bad("shift takes a step and an optional coefficient", n);
    if (!(h == kLine) || !(g == kLine)) bad("shift acts on Z", n);
    const DivisionScalar k = n.kids.size() == 2 ? scalar(n.kids[1]) : DivisionScalar(1);
    return SymMatrix::translationOp(integer(n.kids[0]), k);
  }
  bad("expected a matrix", n);
}

Factor Evaluator::factor(const Node& raw, const Universe& h, const Universe& g) const {
  const Node& n = resolve(raw);
  if (n.kind == NodeKind::Binary && n.text == "*") {
    return multiply(factor(n.kids[0], h, g), factor(n.kids[1], h, g));
  }
  switch (sortOf(n)) {
    case Sort::Scalar: return scalar(n);
    case Sort::Matrix: return matrix(n, h, g);
    case Sort::Sum: {
      const bool isRow = n.kind == NodeKind::Call && n.text == "row";
      return sum(n, isRow ? h : g);
    }
    default: bad("sets and filters cannot be multiplied", n);
  }
}

Value Evaluator::value(const Node& raw, const Universe& u) const {
  const Node& n = resolve(raw);
  const Universe& h = u.isProduct() ? u.left() : u;
  const Universe& g = u.isProduct() ? u.right() : u;
  if (n.kind == NodeKind::Binary && n.text == "*") {
    return std::visit([](const auto& x) -> Value { return x; }, factor(n, h, g));
  }
  switch (sortOf(n)) {
    case Sort::Scalar: return scalar(n);
    case Sort::Set: return std::visit([](const auto& x) -> Value { return x; }, set(n, u));
    case Sort::Filter: return filter(n, u);
    case Sort::Sum: return sum(n, u);
    case Sort::Matrix: return matrix(n, h, g);
  }
  bad("not an expression", n);
}

namespace {

void fromTri(QueryResult& r, const Tri& t) {
  r.verdict = t.str();
  if (t.isUnknown()) r.reason = t.reason;
}

void fromDecision(QueryResult& r, const Decision& d) {
  fromTri(r, d.tri);
  if (d.witness) r.witness = setStr(*d.witness);
}

void setValue(QueryResult& r, const std::string& v) {
  r.verdict = "value";
  r.value = v;
}

std::string errorName(const std::exception& e) {
  if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const EvalError*>(&e)) return "EvalError";
  if (dynamic_cast<const TypeError*>(&e)) return "TypeError";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const UniverseMismatch*>(&e)) return "UniverseMismatch";
  if (dynamic_cast<const UnsupportedUniverse*>(&e)) return "UnsupportedUniverse";
  if (dynamic_cast<const InvalidNeighborhood*>(&e)) return "InvalidNeighborhood";
  if (dynamic_cast<const NonBalanced*>(&e)) return "NonBalanced";
  if (dynamic_cast<const PreconditionError*>(&e)) return "PreconditionError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

}  // namespace

QueryResult Evaluator::query(const Statement& s) {
  QueryResult r;
  const auto& a = s.args;
  const Universe& u = u_;
  const Universe& h = u.isProduct() ? u.left() : u;
  const Universe& g = u.isProduct() ? u.right() : u;
  const std::string& v = s.name;
  if (v == "member") {
    fromTri(r, member(filter(a[0], u), set(a[1], u)));
  } else if (v == "leq" || v == "equiv") {
    const Filter x = filter(a[0], u), y = filter(a[1], u);
    fromDecision(r, v == "leq" ? filterLeq(x, y) : equivalent(x, y));
  } else if (v == "proper" || v == "balanced" || v == "selfadj") {
    const Filter x = filter(a[0], u);
    fromDecision(r, v == "proper" ? isProper(x) : v == "balanced" ? isBalanced(x) : isSelfAdjoint(x));
  } else if (v == "inspace") {
    const FormalSum f = sum(a[0], u);
    fromTri(r, inSpace(f, filter(a[1], u)));
    if (r.verdict == "no") r.witness = f.zeroSet().str();
  } else if (v == "pair") {
    setValue(r, pairing(sum(a[0], u), sum(a[1], u)).str());
  } else if (v == "gsum") {
    const Node& fam = resolve(a[0]);
    const Filter f = filter(a[1], u);
    SumResult res;
    if (fam.kind == NodeKind::Call && fam.text == "family") {
      arity(fam, 2);
      res = gSumDelta(lineSet(fam.kids[0], u), sum(fam.kids[1], u), f);
    } else if ((fam.kind == NodeKind::Braced && fam.text.empty()) || fam.kind == NodeKind::List) {
      std::vector<FormalSum> items;
      for (const auto& k : fam.kids) items.push_back(sum(k, u));
      res = gSum(items, f);
    } else {
      bad("gsum takes {sums...} or family(A, k)", fam);
    }
    fromTri(r, res.summable);
    r.value = res.value.str();
    if (res.summable.isYes()) r.verdict = "value";
    if (res.summable.isNo()) r.witness = res.zeroIntersection.str();
  } else if (v == "nbhd") {
    fromTri(r, inNeighborhood(sum(a[0], u), lineSet(a[1], u), filter(a[2], u)));
  } else if (v == "apply") {
    setValue(r, matVec(matrix(a[0], h, g), sum(a[1], g)).str());
  } else if (v == "vecmat") {
    setValue(r, vecMat(sum(a[0], h).asRow(), matrix(a[1], h, g)).str());
  } else if (v == "mul") {
    lineOf(u, a[0]);
    setValue(r, matMul(matrix(a[0], u, u), matrix(a[1], u, u)).str());
  } else if (v == "entry") {
    setValue(r, matrix(a[0], h, g).at(integer(a[1]), integer(a[2])).str());
  } else if (v == "contl" || v == "contr" || v == "m1" || v == "m2") {
    const SymMatrix m = matrix(a[0], h, g);
    const Filter fg = filter(a[1], g), fh = filter(a[2], h);
    if (v == "contl") fromTri(r, isContinuousLeft(m, fg, fh));
    if (v == "contr") fromTri(r, isContinuousRight(m, fg, fh));
    if (v == "m1") fromTri(r, checkM1(m, fg, fh));
    if (v == "m2") fromTri(r, checkM2(m, fg, fh));
  } else if (v == "eval") {
    setValue(r, valueStr(value(a[0], u)));
  } else {
    throw EvalError("unknown query '" + v + "'", a.empty() ? Node{} : a[0]);
  }
  return r;
}

std::optional<QueryResult> Evaluator::run(const Statement& s) {
  const auto start = std::chrono::steady_clock::now();
  QueryResult r;
  r.query = print(s);
  r.asserted = s.check;
  try {
    switch (s.kind) {
      case StatementKind::Let: env_[s.name] = s.args[0]; return std::nullopt;
      case StatementKind::Universe: u_ = universeOf(s.args[0]); return std::nullopt;
      case StatementKind::Query: {
        const std::string query = r.query;
        r = this->query(s);
        r.query = query;
        r.asserted = s.check;
        break;
      }
    }
  } catch (const UndefinedPairing& e) {
    r.verdict = "no";
    r.reason = e.what();
    r.witness = e.witness;
  } catch (const UndefinedProduct& e) {
    r.verdict = "no";
    r.reason = e.what();
    r.witness = e.witness;
  } catch (const NotSummable& e) {
    r.verdict = "no";
    r.reason = e.what();
    r.witness = e.witness;
  } catch (const UnrepresentableResult& e) {
    r.verdict = "unknown";
    r.reason = e.what();
  } catch (const std::exception& e) {
    r.verdict = "error";
    r.errorType = errorName(e);
    r.reason = e.what();
  }
  r.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return r;
}

std::vector<QueryResult> Evaluator::runProgram(const std::string& text) {
  std::vector<Statement> program;
  try {
    program = parse(text);
  } catch (const SyntaxError& e) {
    QueryResult r;
    r.query = "parse";
    r.verdict = "error";
    r.errorType = "SyntaxError";
    r.reason = e.what();
    return {r};
  }
  std::vector<QueryResult> out;
  for (const auto& s : program) {
    if (auto r = run(s)) out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace gzero::dsl
