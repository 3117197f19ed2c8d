#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gzero/universe.hpp"

namespace gzero {

/// Subset of a one-dimensional universe in canonical interval normal form:
/// sorted, pairwise disjoint, non-adjacent, nonempty intervals clipped to the
/// universe's domain. Finite exceptions are singleton intervals, so two sets
/// are equal iff their interval lists are equal.
class SymSet {
 public:
  SymSet() = default;
  explicit SymSet(Universe u) : u_(std::move(u)) {}

  static SymSet empty(const Universe& u) { return SymSet(u); }
  static SymSet full(const Universe& u);
  static SymSet interval(const Universe& u, Point lo, Point hi);
  static SymSet point(const Universe& u, Point p) { return interval(u, p, p); }
  static SymSet points(const Universe& u, const std::vector<Point>& pts);
  static SymSet fromIntervals(const Universe& u, std::vector<Interval> ivs);

  const Universe& universe() const { return u_; }
  const std::vector<Interval>& intervals() const { return iv_; }

  bool contains(Point p) const;
  bool isEmpty() const { return iv_.empty(); }
  bool isFull() const;
  bool isFinite() const;
  bool isCofinite() const;
  /// Finite number of points (throws on infinite sets).
  std::size_t count() const;
  std::vector<Point> elements() const;

  bool boundedBelow() const;
  bool boundedAbove() const;
  /// Contains a ray (−∞, x] inside the domain (never on ℕ or finite universes).
  bool hasLowerRay() const;
  bool hasUpperRay() const;
  /// Descending chain condition; on ℤ equivalent to bounded below.
  bool hasDCC() const;
  bool hasACC() const;

  std::optional<Point> min() const;
  std::optional<Point> max() const;

  SymSet complement() const;
  SymSet star() const;
  bool subsetOf(const SymSet& other) const;

  /// Largest absolute value among finite endpoints (0 for the empty set).
  Point maxAbsConstant() const;

  friend SymSet unite(const SymSet& a, const SymSet& b);
  friend SymSet intersect(const SymSet& a, const SymSet& b);
  friend SymSet minus(const SymSet& a, const SymSet& b);
  friend bool operator==(const SymSet& a, const SymSet& b);

  /// DSL form, e.g. `union([0..5], [7..inf))`, `{}` for the empty set.
  std::string str() const;

 private:
  void canonicalize();

  Universe u_;
  std::vector<Interval> iv_;
};

std::string intervalStr(const Interval& iv);

}  // namespace gzero
