#include "gzero/formal_sum.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "gzero/error.hpp"

namespace gzero {

namespace {

constexpr Point kMaxWindow = 4'000'000;

std::size_t minimalPeriod(const std::vector<DivisionScalar>& c) {
  const std::size_t p = c.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = c[i] == c[i - d];
    if (ok) return d;
  }
  return p;
}

void rotateRight(std::vector<DivisionScalar>& c) {
  std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
}

void rotateLeft(std::vector<DivisionScalar>& c) { std::rotate(c.begin(), c.begin() + 1, c.end()); }

std::size_t lcm(std::size_t a, std::size_t b) { return std::lcm(a, b); }

// Remainder in [0, p).
std::size_t mod(Point a, std::size_t p) {
  const auto q = static_cast<Point>(p);
  return static_cast<std::size_t>(((a % q) + q) % q);
}

}  // namespace

FormalSum::FormalSum(Universe u, ScalarKind kind, Side side)
    : u_(std::move(u)), kind_(kind), side_(side) {
  if (u_.isProduct()) throw UnsupportedUniverse("formal sums live on one-dimensional universes");
}

FormalSum FormalSum::tabulate(const Universe& u, ScalarKind kind, Layout layout,
                              const std::function<DivisionScalar(Point)>& value, Side side) {
  FormalSum f(u, kind, side);
  const Interval dom = u.domain();
  if (dom.hi != kPosInf) {
    if (layout.upPeriod) layout.hi = dom.hi;
    layout.upPeriod.reset();
  }
  if (dom.lo != kNegInf) {
    if (layout.lowPeriod) layout.lo = dom.lo;
    layout.lowPeriod.reset();
  }
  if (layout.upPeriod && layout.hi == kNegInf) layout.hi = layout.lo - 1;
  if (layout.lowPeriod && layout.lo == kPosInf) layout.lo = layout.hi + 1;
  layout.lo = std::max(layout.lo, dom.lo);
  layout.hi = std::min(layout.hi, dom.hi);
  if (layout.lo <= layout.hi && layout.hi - layout.lo > kMaxWindow) {
    throw UnrepresentableResult("explicit window of a formal sum is too large");
  }
  auto put = [&](Point n, const DivisionScalar& v) {
    if (v.isZero()) return;
    if (v.kind() != kind) throw TypeError("formal sum mixes scalar kinds");
    f.finite_.emplace(n, v);
  };
  for (Point n = layout.lo; n <= layout.hi; ++n) put(n, value(n));
  auto tail = [&](Point anchor, std::size_t period, int dir) {
    Tail t{anchor, {}};
    for (std::size_t i = 0; i < period; ++i) {
      t.coeffs.push_back(value(anchor + dir * static_cast<Point>(i)));
    }
    return t;
  };
  if (layout.upPeriod) f.up_ = tail(layout.hi + 1, *layout.upPeriod, 1);
  if (layout.lowPeriod) f.low_ = tail(layout.lo - 1, *layout.lowPeriod, -1);
  f.canonicalize();
  return f;
}

void FormalSum::canonicalize() {
  for (std::optional<Tail>* t : {&up_, &low_}) {
    if (!*t) continue;
    auto& c = (*t)->coeffs;
    const auto zeros = std::count_if(c.begin(), c.end(), [](const auto& x) { return x.isZero(); });
    if (zeros == static_cast<std::ptrdiff_t>(c.size())) {
      t->reset();
      continue;
    }
    if (zeros > 0) {
      throw UnrepresentableResult(
          "periodic tail with zero coefficients: its support is not a union of intervals");
    }
    for (const auto& x : c) {
      if (x.kind() != kind_) throw TypeError("formal sum mixes scalar kinds");
    }
    c.resize(minimalPeriod(c));
  }
  if (up_) {
    for (auto it = finite_.find(up_->anchor - 1);
         it != finite_.end() && it->second == up_->coeffs.back();
         it = finite_.find(up_->anchor - 1)) {
      finite_.erase(it);
      up_->anchor -= 1;
      rotateRight(up_->coeffs);
    }
  }
  if (low_) {
    for (auto it = finite_.find(low_->anchor + 1);
         it != finite_.end() && it->second == low_->coeffs.back();
         it = finite_.find(low_->anchor + 1)) {
      finite_.erase(it);
      low_->anchor += 1;
      rotateRight(low_->coeffs);
    }
  }
  if (!(up_ && low_ && finite_.empty() && up_->anchor == low_->anchor + 1)) return;
  // Adjacent tails: slide the boundary down while the upper pattern still
  // matches. Matching for a full common period means the sequence is
  // periodic on all of Z, and the boundary is then pinned at 0.
  const std::size_t p = lcm(up_->period(), low_->period());
  std::size_t moved = 0;
  while (moved < p && low_->coeffs.front() == up_->coeffs.back()) {
    up_->anchor -= 1;
    rotateRight(up_->coeffs);
    low_->anchor -= 1;
    rotateLeft(low_->coeffs);
    ++moved;
  }
  if (moved < p) return;
  const Tail t = *up_;
  std::vector<DivisionScalar> c, lc;
  for (std::size_t i = 0; i < t.period(); ++i) {
    c.push_back(t.coeffs[mod(static_cast<Point>(i) - t.anchor, t.period())]);
  }
  for (std::size_t i = 0; i < t.period(); ++i) {
    lc.push_back(c[mod(-1 - static_cast<Point>(i), t.period())]);
  }
  up_ = Tail{0, c};
  lc.resize(minimalPeriod(lc));
  low_ = Tail{-1, lc};
}

FormalSum FormalSum::delta(const Universe& u, Point p, DivisionScalar k) {
  if (!u.contains(p)) throw UniverseMismatch("delta at a point outside " + u.str());
  FormalSum f(u, k.kind());
  if (!k.isZero()) f.finite_.emplace(p, std::move(k));
  return f;
}

FormalSum FormalSum::fromMap(const Universe& u, ScalarKind kind,
                             const std::map<Point, DivisionScalar>& values) {
  Layout l;
  for (const auto& [p, v] : values) {
    if (!u.contains(p)) throw UniverseMismatch("point " + std::to_string(p) + " outside " + u.str());
    l.lo = std::min(l.lo, p);
    l.hi = std::max(l.hi, p);
  }
  return tabulate(u, kind, l, [&](Point n) {
    auto it = values.find(n);
    return it == values.end() ? DivisionScalar::zero(kind) : it->second;
  });
}

FormalSum FormalSum::pattern(const Universe& u, const Interval& ray,
                             std::vector<DivisionScalar> coeffs) {
  if (coeffs.empty()) throw PreconditionError("pattern needs at least one coefficient");
  const ScalarKind kind = coeffs.front().kind();
  const std::size_t p = coeffs.size();
  Layout l;
  std::function<DivisionScalar(Point)> value;
  if (ray.lo != kNegInf) {
    l.lo = ray.lo;
    l.hi = ray.hi == kPosInf ? ray.lo - 1 : ray.hi;
    if (ray.hi == kPosInf) l.upPeriod = p;
    value = [=](Point n) {
      return ray.contains(n) ? coeffs[mod(n - ray.lo, p)] : DivisionScalar::zero(kind);
    };
  } else if (ray.hi != kPosInf) {
    l.lo = ray.hi + 1;
    l.hi = ray.hi;
    l.lowPeriod = p;
    value = [=](Point n) {
      return n <= ray.hi ? coeffs[mod(ray.hi - n, p)] : DivisionScalar::zero(kind);
    };
  } else {
    l.lo = 0;
    l.hi = -1;
    l.upPeriod = p;
    l.lowPeriod = p;
    value = [=](Point n) { return coeffs[mod(n, p)]; };
  }
  return tabulate(u, kind, l, value);
}

FormalSum FormalSum::charFn(const SymSet& a, ScalarKind kind) {
  Layout l;
  for (const auto& iv : a.intervals()) {
    if (iv.lo != kNegInf) l.lo = std::min(l.lo, iv.lo), l.hi = std::max(l.hi, iv.lo);
    if (iv.hi != kPosInf) l.lo = std::min(l.lo, iv.hi), l.hi = std::max(l.hi, iv.hi);
  }
  if (a.hasUpperRay()) l.upPeriod = 1;
  if (a.hasLowerRay()) l.lowPeriod = 1;
  if (l.lo > l.hi) l.lo = 0, l.hi = -1;
  const DivisionScalar one = DivisionScalar::one(kind), zero = DivisionScalar::zero(kind);
  return tabulate(a.universe(), kind, l, [&](Point n) { return a.contains(n) ? one : zero; });
}

FormalSum FormalSum::asRow() const {
  FormalSum f = *this;
  f.side_ = Side::Row;
  return f;
}

FormalSum FormalSum::asColumn() const {
  FormalSum f = *this;
  f.side_ = Side::Column;
  return f;
}

FormalSum::Layout FormalSum::layout() const {
  Layout l;
  if (!finite_.empty()) {
    l.lo = finite_.begin()->first;
    l.hi = finite_.rbegin()->first;
  }
  if (up_) {
    l.hi = up_->anchor - 1;
    l.lo = std::min(l.lo, up_->anchor);
    l.upPeriod = up_->period();
  }
  if (low_) {
    l.lo = low_->anchor + 1;
    l.hi = std::max(l.hi, low_->anchor);
    l.lowPeriod = low_->period();
  }
  return l;
}

FormalSum::Layout joinLayouts(const FormalSum::Layout& a, const FormalSum::Layout& b) {
  FormalSum::Layout l;
  l.lo = std::min(a.lo, b.lo);
  l.hi = std::max(a.hi, b.hi);
  auto merge = [](std::optional<std::size_t> x, std::optional<std::size_t> y) {
    if (x && y) return std::optional<std::size_t>(lcm(*x, *y));
    return x ? x : y;
  };
  l.upPeriod = merge(a.upPeriod, b.upPeriod);
  l.lowPeriod = merge(a.lowPeriod, b.lowPeriod);
  return l;
}

DivisionScalar FormalSum::at(Point n) const {
  auto it = finite_.find(n);
  if (it != finite_.end()) return it->second;
  if (up_ && n >= up_->anchor) return up_->coeffs[mod(n - up_->anchor, up_->period())];
  if (low_ && n <= low_->anchor) return low_->coeffs[mod(low_->anchor - n, low_->period())];
  return DivisionScalar::zero(kind_);
}

SymSet FormalSum::support() const {
  std::vector<Interval> ivs;
  for (const auto& [p, v] : finite_) ivs.push_back({p, p});
  if (up_) ivs.push_back({up_->anchor, kPosInf});
  if (low_) ivs.push_back({kNegInf, low_->anchor});
  return SymSet::fromIntervals(u_, std::move(ivs));
}

Point FormalSum::maxAbsConstant() const {
  Point m = 0;
  for (const auto& [p, v] : finite_) m = std::max(m, std::abs(p));
  if (up_) m = std::max(m, std::abs(up_->anchor) + static_cast<Point>(up_->period()));
  if (low_) m = std::max(m, std::abs(low_->anchor) + static_cast<Point>(low_->period()));
  return m;
}

FormalSum FormalSum::operator-() const { return scaleLeft(-DivisionScalar::one(kind_), *this); }

FormalSum operator+(const FormalSum& a, const FormalSum& b) {
  requireSameUniverse(a.u_, b.u_, "formal sum addition");
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  if (a.kind_ != b.kind_) throw TypeError("adding formal sums over different scalar kinds");
  return FormalSum::tabulate(a.u_, a.kind_, joinLayouts(a.layout(), b.layout()),
                             [&](Point n) { return a.at(n) + b.at(n); }, a.side_);
}

FormalSum operator-(const FormalSum& a, const FormalSum& b) { return a + (-b); }

bool operator==(const FormalSum& a, const FormalSum& b) {
  if (!(a.u_ == b.u_)) return false;
  if (a.isZero() || b.isZero()) return a.isZero() && b.isZero();
  return a.kind_ == b.kind_ && a.finite_ == b.finite_ && a.up_ == b.up_ && a.low_ == b.low_;
}

FormalSum scaleLeft(const DivisionScalar& k, const FormalSum& f) {
  if (k.isZero() || f.isZero()) return FormalSum(f.universe(), f.kind(), f.side());
  return FormalSum::tabulate(f.universe(), f.kind(), f.layout(), [&](Point n) { return k * f.at(n); },
                             f.side());
}

FormalSum scaleRight(const FormalSum& f, const DivisionScalar& k) {
  if (k.isZero() || f.isZero()) return FormalSum(f.universe(), f.kind(), f.side());
  return FormalSum::tabulate(f.universe(), f.kind(), f.layout(),
                             [&](Point n) { return f.at(n) * k; }, f.side());
}

FormalSum FormalSum::reflect() const {
  if (u_.kind() != UniverseKind::IntLine) throw UnsupportedUniverse("reflection needs Z");
  Layout l = layout();
  Layout r;
  r.lo = l.hi == kNegInf ? kPosInf : -l.hi;
  r.hi = l.lo == kPosInf ? kNegInf : -l.lo;
  r.upPeriod = l.lowPeriod;
  r.lowPeriod = l.upPeriod;
  return tabulate(u_, kind_, r, [&](Point n) { return at(-n); }, side_);
}

FormalSum FormalSum::restrict(const SymSet& a) const {
  requireSameUniverse(a.universe(), u_, "restrict");
  Layout l = layout();
  for (const auto& iv : a.intervals()) {
    for (Point p : {iv.lo, iv.hi}) {
      if (p == kNegInf || p == kPosInf) continue;
      l.lo = std::min(l.lo, p);
      l.hi = std::max(l.hi, p);
    }
  }
  const DivisionScalar zero = DivisionScalar::zero(kind_);
  return tabulate(u_, kind_, l, [&](Point n) { return a.contains(n) ? at(n) : zero; }, side_);
}

std::string FormalSum::str() const {
  std::vector<std::string> parts;
  if (!finite_.empty() || (!up_ && !low_)) {
    std::string s = "fsum{";
    bool first = true;
    for (const auto& [p, v] : finite_) {
      s += (first ? "" : ", ") + std::to_string(p) + ":" + v.str();
      first = false;
    }
    parts.push_back(s + "}");
  }
  auto pat = [](const std::string& ray, const Tail& t) {
    std::string s = "pat(" + ray + ", period=" + std::to_string(t.period()) + ", [";
    for (std::size_t i = 0; i < t.period(); ++i) s += (i ? ", " : "") + t.coeffs[i].str();
    return s + "])";
  };
  if (low_) parts.push_back(pat(intervalStr({kNegInf, low_->anchor}), *low_));
  if (up_) parts.push_back(pat(intervalStr({up_->anchor, kPosInf}), *up_));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

Tri inSpace(const FormalSum& f, const Filter& filter) { return member(filter, f.zeroSet()); }

bool pairingDefined(const FormalSum& f, const FormalSum& h) {
  requireSameUniverse(f.universe(), h.universe(), "pairing");
  return intersect(f.support(), h.support().star()).isFinite();
}

DivisionScalar pairing(const FormalSum& f, const FormalSum& h) {
  requireSameUniverse(f.universe(), h.universe(), "pairing");
  const SymSet meetSet = intersect(f.support(), h.support().star());
  if (!meetSet.isFinite()) {
    throw UndefinedPairing("pairing is an infinite sum", meetSet.str());
  }
  if (meetSet.isEmpty()) return DivisionScalar::zero(f.kind());
  DivisionScalar total = DivisionScalar::zero(f.kind());
  for (Point x : meetSet.elements()) total += f.at(x) * h.at(f.universe().star(x));
  return total;
}

namespace {

SumResult finishSum(FormalSum value, const SymSet& zeros, const Filter& filter) {
  Tri t = member(filter, zeros);
  if (t.isNo()) {
    throw NotSummable("intersection of zero sets is not in " + filter.str(), zeros.str());
  }
  return {std::move(value), t, zeros};
}

}  // namespace

SumResult gSum(const std::vector<FormalSum>& family, const Filter& filter) {
  const Universe& u = filter.universe();
  FormalSum total = FormalSum::zero(u);
  SymSet zeros = SymSet::full(u);
  for (const auto& f : family) {
    total = total + f;
    zeros = intersect(zeros, f.zeroSet());
  }
  return finishSum(std::move(total), zeros, filter);
}

SumResult gSumDelta(const SymSet& index, const FormalSum& k, const Filter& filter) {
  FormalSum value = k.restrict(index);
  SymSet zeros = value.zeroSet();
  return finishSum(std::move(value), zeros, filter);
}

Tri inNeighborhood(const FormalSum& f, const SymSet& a, const Filter& filter) {
  Tri base = member(perp(filter), a);
  if (!base.isYes()) {
    throw InvalidNeighborhood(a.str() + " is not known to lie in perp(" + filter.str() + ")");
  }
  return inSpace(f, filter) && Tri::of(f.support().subsetOf(a));
}

std::pair<FormalSum, FormalSum> splitBy(const FormalSum& f, const SymSet& a) {
  return {f.restrict(a), f.restrict(a.complement())};
}

FormalSum truncate(const FormalSum& f, const SymSet& window) {
  if (!window.isFinite()) throw PreconditionError("truncation window must be finite");
  return f.restrict(window);
}

}  // namespace gzero
