#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace gzero {

using Point = std::int64_t;

inline constexpr Point kNegInf = std::numeric_limits<Point>::min();
inline constexpr Point kPosInf = std::numeric_limits<Point>::max();

/// Closed integer interval; `lo` may be kNegInf and `hi` may be kPosInf.
struct Interval {
  Point lo = kNegInf;
  Point hi = kPosInf;

  bool empty() const { return lo > hi; }
  bool bounded() const { return lo != kNegInf && hi != kPosInf; }
  bool contains(Point p) const { return lo <= p && p <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval meet(const Interval& a, const Interval& b);
/// Saturating arithmetic on endpoints.
Point addBound(Point a, Point b);
Point negBound(Point a);
Point floorDiv2(Point a);
Point ceilDiv2(Point a);

enum class UniverseKind { Finite, IntLine, IntHalfLine, Product };
enum class Involution { Identity, Negate, Permutation };

/// Index set with an involution. Finite universes use label indices 0..n-1
/// (their order, when present, is index order); IntLine is ℤ with either
/// g ↦ −g (the group inverse) or the identity; IntHalfLine is ℕ with the
/// identity. Product universes are unordered and carry no involution.
class Universe {
 public:
  Universe();  // ℤ with negate involution

  static Universe finite(std::size_t size, bool ordered = true);
  static Universe finite(std::vector<std::string> labels, std::vector<Point> involution,
                         bool ordered = true);
  static Universe intLine(Involution inv = Involution::Negate);
  static Universe intHalfLine();
  static Universe product(const Universe& h, const Universe& g);
  /// Always throws: ℚ with arbitrary well-ordered subsets is not finitely
  /// representable.
  [[noreturn]] static Universe rationals();

  UniverseKind kind() const { return kind_; }
  Involution involution() const { return involution_; }
  bool isProduct() const { return kind_ == UniverseKind::Product; }
  bool isFinite() const { return kind_ == UniverseKind::Finite; }
  bool hasOrder() const;
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Points of a one-dimensional universe form this interval.
  Interval domain() const;
  bool contains(Point p) const { return domain().contains(p); }
  Point star(Point p) const;
  /// True when star reverses the order (negate on ℤ).
  bool starReversesOrder() const { return involution_ == Involution::Negate; }

  const Universe& left() const;
  const Universe& right() const;

  friend bool operator==(const Universe& a, const Universe& b);
  std::string str() const;

 private:
  UniverseKind kind_ = UniverseKind::IntLine;
  Involution involution_ = Involution::Negate;
  bool ordered_ = true;
  std::vector<std::string> labels_;
  std::vector<Point> perm_;
  std::shared_ptr<const Universe> left_, right_;
};

void requireSameUniverse(const Universe& a, const Universe& b, const char* op);

std::string boundStr(Point p);

}  // namespace gzero
