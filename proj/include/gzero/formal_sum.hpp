#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gzero/filter.hpp"
#include "gzero/scalar.hpp"

namespace gzero {

enum class Side { Row, Column };

/// Periodic tail on a ray. Upper tails give f(n) = coeffs[(n − anchor) mod p]
/// for n ≥ anchor; lower tails give f(n) = coeffs[(anchor − n) mod p] for
/// n ≤ anchor.
struct Tail {
  Point anchor = 0;
  std::vector<DivisionScalar> coeffs;

  std::size_t period() const { return coeffs.size(); }
  friend bool operator==(const Tail&, const Tail&) = default;
};

/// Element of Map(G, K) whose support is a finite set plus at most one
/// periodic tail per end. Canonical: no stored zeros, tails of minimal period
/// and maximal extent, every tail coefficient nonzero (so the support is a
/// union of intervals). Tails with some zero coefficients are rejected with
/// UnrepresentableResult.
class FormalSum {
 public:
  FormalSum() = default;
  FormalSum(Universe u, ScalarKind kind, Side side = Side::Column);

  /// Finite window [lo, hi] of explicit values, plus optional tails above hi
  /// and below lo with the given periods; `value` is sampled on the window
  /// and on one period of each tail.
  struct Layout {
    Point lo = kPosInf;
    Point hi = kNegInf;
    std::optional<std::size_t> upPeriod;
    std::optional<std::size_t> lowPeriod;
  };
  static FormalSum tabulate(const Universe& u, ScalarKind kind, Layout layout,
                            const std::function<DivisionScalar(Point)>& value,
                            Side side = Side::Column);

  static FormalSum zero(const Universe& u, ScalarKind kind = ScalarKind::Rational) {
    return FormalSum(u, kind);
  }
  static FormalSum delta(const Universe& u, Point p, DivisionScalar k = DivisionScalar(1));
  static FormalSum fromMap(const Universe& u, ScalarKind kind,
                           const std::map<Point, DivisionScalar>& values);
  static FormalSum pattern(const Universe& u, const Interval& ray,
                           std::vector<DivisionScalar> coeffs);
  /// 1 on A and 0 elsewhere.
  static FormalSum charFn(const SymSet& a, ScalarKind kind = ScalarKind::Rational);

  const Universe& universe() const { return u_; }
  ScalarKind kind() const { return kind_; }
  Side side() const { return side_; }
  FormalSum asRow() const;
  FormalSum asColumn() const;

  const std::map<Point, DivisionScalar>& finitePart() const { return finite_; }
  const std::optional<Tail>& upperTail() const { return up_; }
  const std::optional<Tail>& lowerTail() const { return low_; }
  Layout layout() const;

  DivisionScalar at(Point n) const;
  bool isZero() const { return finite_.empty() && !up_ && !low_; }
  bool hasFiniteSupport() const { return !up_ && !low_; }
  SymSet support() const;
  SymSet zeroSet() const { return support().complement(); }
  Point maxAbsConstant() const;

  FormalSum operator-() const;
  friend FormalSum operator+(const FormalSum& a, const FormalSum& b);
  friend FormalSum operator-(const FormalSum& a, const FormalSum& b);
  friend bool operator==(const FormalSum& a, const FormalSum& b);

  /// n ↦ f(−n) on ℤ.
  FormalSum reflect() const;
  /// f restricted to A (zero outside A).
  FormalSum restrict(const SymSet& a) const;

  /// DSL form: `fsum{0:1, 5:-1} + pat([6..inf), period=2, [1, -1])`.
  std::string str() const;

 private:
  void canonicalize();

  Universe u_ = Universe::intLine();
  ScalarKind kind_ = ScalarKind::Rational;
  Side side_ = Side::Column;
  std::map<Point, DivisionScalar> finite_;
  std::optional<Tail> up_, low_;
};

FormalSum scaleLeft(const DivisionScalar& k, const FormalSum& f);
FormalSum scaleRight(const FormalSum& f, const DivisionScalar& k);

/// Layout covering both operands.
FormalSum::Layout joinLayouts(const FormalSum::Layout& a, const FormalSum::Layout& b);

Tri inSpace(const FormalSum& f, const Filter& filter);

/// True when supp(f) ∩ supp(h)* is finite.
bool pairingDefined(const FormalSum& f, const FormalSum& h);
/// Σ f(x)·h(x*); throws UndefinedPairing with the infinite intersection.
DivisionScalar pairing(const FormalSum& f, const FormalSum& h);

struct SumResult {
  FormalSum value;
  Tri summable;  // condition on the intersection of zero sets
  SymSet zeroIntersection;
};

/// 𝔊-sum of a finite family. Throws NotSummable when the intersection of the
/// zero sets is decided to lie outside the filter.
SumResult gSum(const std::vector<FormalSum>& family, const Filter& filter);
/// 𝔊-sum of {δ^t·k(t) : t ∈ index}: pointwise finite by construction.
SumResult gSumDelta(const SymSet& index, const FormalSum& k, const Filter& filter);

/// f ∈ U(A, 𝔊): f ∈ FU(𝔊) and supp f ⊆ A. Requires A ∈ 𝔊^⊥ (InvalidNeighborhood).
Tri inNeighborhood(const FormalSum& f, const SymSet& a, const Filter& filter);

std::pair<FormalSum, FormalSum> splitBy(const FormalSum& f, const SymSet& a);
FormalSum truncate(const FormalSum& f, const SymSet& window);

}  // namespace gzero
