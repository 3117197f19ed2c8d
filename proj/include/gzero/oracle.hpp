#pragma once

// Brute-force reference models used only by tests. None of them call the
// library's decision procedures; they work from point membership.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <optional>
#include <vector>

#include "gzero/filter.hpp"
#include "gzero/matrix.hpp"

namespace oracle {

using gzero::Point;

/// Exhaustive filter interpreter on a compactified line: the points −w..w
/// (clipped to the domain) plus one bit per infinite end standing for the
/// whole tail beyond the window. A filter is the explicit family of all
/// 2^bits encoded sets it contains. Faithful for sets whose interval
/// endpoints lie strictly inside the window.
class CompactLine {
 public:
  CompactLine(const gzero::Universe& u, Point w);

  using Family = std::vector<bool>;

  std::uint32_t encode(const gzero::SymSet& x) const;
  gzero::SymSet decode(std::uint32_t bits) const;
  std::size_t size() const { return std::size_t{1} << bits_; }

  /// Nullopt for nodes the model does not cover (product filters).
  std::optional<Family> family(const gzero::Filter& f) const;
  bool contains(const Family& fam, const gzero::SymSet& x) const { return fam[encode(x)]; }

 private:
  std::optional<Family> build(const gzero::Filter& f) const;
  Family atom(const std::function<bool(std::uint32_t)>& pred) const;
  bool cofinite(std::uint32_t s) const;
  bool complementBoundedBelow(std::uint32_t s) const;
  bool complementBoundedAbove(std::uint32_t s) const;
  std::uint32_t star(std::uint32_t s) const;

  gzero::Universe u_;
  std::vector<Point> pts_;  // middle points in bit order
  int lowBit_ = -1, highBit_ = -1;
  int bits_ = 0;
  std::uint32_t full_ = 0;
  mutable std::map<std::string, std::optional<Family>> memo_;  // by filter text
};

/// Pointwise reference for membership in product filters built from the
/// line atoms all/cof/dcc/acc on ℤ×ℤ: tensor, times, cofpair, angle, their
/// perp and perp-perp, meets of those. Finiteness and boundedness are read
/// off point counts in nested boxes of radius w, 2w, 4w.
class ProductWindow {
 public:
  explicit ProductWindow(Point w) : w_(w) {}

  /// Nullopt when the filter is outside the covered shapes.
  std::optional<bool> member(const gzero::Filter& f, const gzero::ProdSet& x) const;

  /// Line membership of a set given by a predicate, for atoms only.
  std::optional<bool> lineMember(gzero::FilterKind atom, const std::function<bool(Point)>& in) const;

 private:
  Point w_;
};

/// Line membership of a set for a closed-form atom, by threshold scans.
std::optional<bool> atomByScan(gzero::FilterKind atom, const std::function<bool(Point)>& in,
                               Point w);

/// Dense square table over a finite universe, rows then columns.
using Dense = std::vector<std::vector<gzero::DivisionScalar>>;
Dense dense(const gzero::SymMatrix& m);
/// Θ(j, g) = Σ_h A(j, h*)·B(h, g) by three nested loops.
Dense twistedProduct(const Dense& a, const Dense& b, const gzero::Universe& middle);

using Entry = std::function<gzero::DivisionScalar(Point, Point)>;
/// Σ_{h ∈ middle, |h| ≤ w} A(j, h*)·B(h, g); exact once both factors vanish
/// beyond the window along the summation.
gzero::DivisionScalar windowProduct(const Entry& a, const Entry& b, const gzero::Universe& middle,
                                    Point j, Point g, Point w, gzero::ScalarKind kind);

}  // namespace oracle
