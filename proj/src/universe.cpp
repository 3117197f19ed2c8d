#include "gzero/universe.hpp"

#include <algorithm>

#include "gzero/error.hpp"

namespace gzero {

Interval meet(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Point addBound(Point a, Point b) {
  if (a == kNegInf || b == kNegInf) {
    if (a == kPosInf || b == kPosInf) throw Error("indeterminate bound -inf + inf");
    return kNegInf;
  }
  if (a == kPosInf || b == kPosInf) return kPosInf;
  return a + b;
}

Point negBound(Point a) {
  if (a == kNegInf) return kPosInf;
  if (a == kPosInf) return kNegInf;
  return -a;
}

Point floorDiv2(Point a) {
  if (a == kNegInf || a == kPosInf) return a;
  return a >= 0 ? a / 2 : -((-a + 1) / 2);
}

Point ceilDiv2(Point a) {
  if (a == kNegInf || a == kPosInf) return a;
  return a >= 0 ? (a + 1) / 2 : -((-a) / 2);
}

Universe::Universe() = default;

Universe Universe::finite(std::size_t size, bool ordered) {
  std::vector<std::string> labels;
  std::vector<Point> perm;
  for (std::size_t i = 0; i < size; ++i) {
    labels.push_back("e" + std::to_string(i));
    perm.push_back(static_cast<Point>(i));
  }
  return finite(std::move(labels), std::move(perm), ordered);
}

Universe Universe::finite(std::vector<std::string> labels, std::vector<Point> involution,
                          bool ordered) {
  if (labels.empty()) throw UnsupportedUniverse("finite universe must be nonempty");
  if (involution.size() != labels.size()) {
    throw UnsupportedUniverse("involution size differs from label count");
  }
  const auto n = static_cast<Point>(labels.size());
  for (Point i = 0; i < n; ++i) {
    Point j = involution[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n || involution[static_cast<std::size_t>(j)] != i) {
      throw UnsupportedUniverse("involution is not a self-inverse bijection");
    }
  }
  Universe u;
  u.kind_ = UniverseKind::Finite;
  u.ordered_ = ordered;
  u.labels_ = std::move(labels);
  u.perm_ = std::move(involution);
  bool identity = true;
  for (Point i = 0; i < n; ++i) identity = identity && u.perm_[static_cast<std::size_t>(i)] == i;
  u.involution_ = identity ? Involution::Identity : Involution::Permutation;
  return u;
}

Universe Universe::intLine(Involution inv) {
  if (inv == Involution::Permutation) {
    throw UnsupportedUniverse("IntLine supports only negate or identity involutions");
  }
  Universe u;
  u.kind_ = UniverseKind::IntLine;
  u.involution_ = inv;
  return u;
}

Universe Universe::intHalfLine() {
  Universe u;
  u.kind_ = UniverseKind::IntHalfLine;
  u.involution_ = Involution::Identity;
  return u;
}

Universe Universe::product(const Universe& h, const Universe& g) {
  if (h.isProduct() || g.isProduct()) {
    throw UnsupportedUniverse("nested product universes are not supported");
  }
  Universe u;
  u.kind_ = UniverseKind::Product;
  u.involution_ = Involution::Identity;
  u.ordered_ = false;
  u.left_ = std::make_shared<const Universe>(h);
  u.right_ = std::make_shared<const Universe>(g);
  return u;
}

Universe Universe::rationals() {
  throw UnsupportedUniverse(
      "the rationals are not a supported ground universe: arbitrary well-ordered "
      "subsets of Q have no finite representation");
}

bool Universe::hasOrder() const {
  switch (kind_) {
    case UniverseKind::Finite: return ordered_;
    case UniverseKind::IntLine:
    case UniverseKind::IntHalfLine: return true;
    case UniverseKind::Product: return false;
  }
  return false;
}

Interval Universe::domain() const {
  switch (kind_) {
    case UniverseKind::Finite: return {0, static_cast<Point>(labels_.size()) - 1};
    case UniverseKind::IntLine: return {kNegInf, kPosInf};
    case UniverseKind::IntHalfLine: return {0, kPosInf};
    case UniverseKind::Product: break;
  }
  throw UnsupportedUniverse("product universe has no one-dimensional domain");
}

Point Universe::star(Point p) const {
  switch (involution_) {
    case Involution::Identity: return p;
    case Involution::Negate: return -p;
    case Involution::Permutation: return perm_.at(static_cast<std::size_t>(p));
  }
  return p;
}

const Universe& Universe::left() const {
  if (!left_) throw UnsupportedUniverse("not a product universe");
  return *left_;
}

const Universe& Universe::right() const {
  if (!right_) throw UnsupportedUniverse("not a product universe");
  return *right_;
}

bool operator==(const Universe& a, const Universe& b) {
  if (a.kind_ != b.kind_ || a.involution_ != b.involution_) return false;
  switch (a.kind_) {
    case UniverseKind::Finite:
      return a.ordered_ == b.ordered_ && a.labels_ == b.labels_ && a.perm_ == b.perm_;
    case UniverseKind::Product: return *a.left_ == *b.left_ && *a.right_ == *b.right_;
    default: return true;
  }
}

std::string Universe::str() const {
  switch (kind_) {
    case UniverseKind::Finite: {
      std::string s = "finite(" + std::to_string(labels_.size());
      if (involution_ == Involution::Permutation) {
        s += ", perm=[";
        for (std::size_t i = 0; i < perm_.size(); ++i) {
          s += (i ? "," : "") + std::to_string(perm_[i]);
        }
        s += "]";
      }
      if (!ordered_) s += ", unordered";
      return s + ")";
    }
    case UniverseKind::IntLine:
      return involution_ == Involution::Negate ? "Z" : "Z(identity)";
    case UniverseKind::IntHalfLine: return "N";
    case UniverseKind::Product: return left_->str() + " x " + right_->str();
  }
  return "?";
}

void requireSameUniverse(const Universe& a, const Universe& b, const char* op) {
  if (!(a == b)) {
    throw UniverseMismatch(std::string(op) + ": universe " + a.str() + " vs " + b.str());
  }
}

std::string boundStr(Point p) {
  if (p == kNegInf) return "-inf";
  if (p == kPosInf) return "inf";
  return std::to_string(p);
}

}  // namespace gzero
