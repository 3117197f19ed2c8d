#include "gzero/sampling.hpp"

#include <cctype>

namespace gzero {

std::uint64_t parseSeed(const std::string& text) {
  std::string digits = text;
  if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
  bool hex = !digits.empty() && digits.size() <= 16;
  for (char c : digits) hex = hex && std::isxdigit(static_cast<unsigned char>(c));
  if (hex) return std::stoull(digits, nullptr, 16);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Point Sampler::point(Point lo, Point hi) {
  return std::uniform_int_distribution<Point>(lo, hi)(rng_);
}

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Interval Sampler::interval() {
  Point a = point(-spread_, spread_), b = point(-spread_, spread_);
  if (a > b) std::swap(a, b);
  switch (point(0, 4)) {
    case 0: return {a, kPosInf};
    case 1: return {kNegInf, b};
    case 2: return {a, a};
    default: return {a, b};
  }
}

SymSet Sampler::set(const Universe& u) {
  const Point n = u.isFinite() ? static_cast<Point>(u.size()) : 0;
  std::vector<Interval> ivs;
  for (Point k = point(0, 3); k > 0; --k) {
    if (n > 0) {
      Point a = point(0, n - 1);
      ivs.push_back({a, coin() ? a : point(a, n - 1)});
    } else {
      ivs.push_back(interval());
    }
  }
  SymSet s = SymSet::fromIntervals(u, ivs);
  switch (point(0, 5)) {
    case 0: return s.complement();
    case 1: return s.star();
    default: return s;
  }
}

ProdSet Sampler::prodSet(const Universe& u) {
  const Interval kFull{kNegInf, kPosInf};
  ProdSet p = ProdSet::empty(u);
  for (Point k = point(1, 3); k > 0; --k) {
    Cell c{kFull, kFull, kFull, kFull};
    switch (point(0, 4)) {
      case 0: c = {interval(), interval(), kFull, kFull}; break;
      case 1: c = {kFull, kFull, interval(), kFull}; break;
      case 2: c = {kFull, kFull, kFull, interval()}; break;
      case 3: c = {interval(), kFull, interval(), kFull}; break;
      default: c = {kFull, interval(), kFull, interval()}; break;
    }
    p = unite(p, ProdSet::cell(u, c));
  }
  return coin(0.4) ? p.complement() : p;
}

}  // namespace gzero

namespace gzero {

Filter Sampler::filter(const Universe& u, int depth) {
  if (depth <= 0 || coin(0.3)) {
    switch (point(0, u.hasOrder() ? 4 : 2)) {
      case 0: return Filter::all(u);
      case 1: return Filter::cof(u);
      case 2: {
        std::vector<SetValue> bases{set(u)};
        if (coin(0.3)) bases.emplace_back(set(u));
        return Filter::principal(u, std::move(bases));
      }
      case 3: return Filter::dcc(u);
      default: return Filter::acc(u);
    }
  }
  switch (point(0, 6)) {
    case 0: return Filter::node(FilterKind::Meet, u, {filter(u, depth - 1), filter(u, depth - 1)});
    case 1: return Filter::node(FilterKind::Join, u, {filter(u, depth - 1), filter(u, depth - 1)});
    case 2:
      return Filter::node(FilterKind::Quotient, u, {filter(u, depth - 1), filter(u, depth - 1)});
    case 3:
    case 4: return Filter::node(FilterKind::Perp, u, {filter(u, depth - 1)});
    case 5: return Filter::node(FilterKind::Star, u, {filter(u, depth - 1)});
    default: return Filter::node(FilterKind::Meet, u, {filter(u, depth - 1), filter(u, 0)});
  }
}

}  // namespace gzero

namespace gzero {

DivisionScalar Sampler::scalar(ScalarKind kind) {
  DivisionScalar r(point(1, 3) * (coin() ? 1 : -1), point(1, 2));
  if (kind == ScalarKind::Rational) return r;
  return DivisionScalar(Quaternion(r.rational(), point(-1, 1), point(-1, 1), point(-1, 1)));
}

FormalSum Sampler::sum(const Universe& u, ScalarKind kind, Side side, bool tails) {
  const Interval dom = u.domain();
  const Point lo = std::max(dom.lo, -spread_), hi = std::min(dom.hi, spread_);
  FormalSum f(u, kind, side);
  for (Point i = point(0, 3); i > 0; --i) f = f + FormalSum::delta(u, point(lo, hi), scalar(kind));
  auto coeffs = [&] {
    std::vector<DivisionScalar> c;
    for (Point i = point(1, 2); i > 0; --i) c.push_back(scalar(kind));
    return c;
  };
  if (tails && dom.hi == kPosInf && coin()) {
    f = f + FormalSum::pattern(u, {point(std::max(lo, Point{-4}), 6), kPosInf}, coeffs());
  }
  if (tails && dom.lo == kNegInf && coin(0.3)) {
    f = f + FormalSum::pattern(u, {kNegInf, point(-6, 4)}, coeffs());
  }
  return side == Side::Row ? f.asRow() : f.asColumn();
}

SymMatrix Sampler::matrix(const Universe& h, const Universe& g, ScalarKind kind) {
  auto explicitBody = [&] {
    std::map<std::pair<Point, Point>, DivisionScalar> e;
    const Point hl = std::max(h.domain().lo, -spread_), hh = std::min(h.domain().hi, spread_);
    const Point gl = std::max(g.domain().lo, -spread_), gh = std::min(g.domain().hi, spread_);
    const Point count = h.isFinite() ? static_cast<Point>(h.size() * g.size()) : point(0, 4);
    for (Point i = 0; i < count; ++i) {
      if (h.isFinite() && coin(0.4)) continue;
      e[{point(hl, hh), point(gl, gh)}] = scalar(kind);
    }
    return SymMatrix::explicitMatrix(h, g, kind, e);
  };
  if (h.isFinite() || g.isFinite()) return explicitBody();
  const Universe z = Universe::intLine();
  auto convBody = [&] {
    const StripeKey key = coin() ? StripeKey::Sum : StripeKey::Diff;
    return SymMatrix::convolution(h, g, sum(z, kind), key);
  };
  switch (point(0, 3)) {
    case 0: return explicitBody();
    case 1: {
      std::vector<RankOne> terms;
      for (Point i = point(1, 2); i > 0; --i) terms.push_back({sum(h, kind), sum(g, kind, Side::Row)});
      return SymMatrix::finitary(h, g, kind, std::move(terms));
    }
    case 2: return convBody();
    default: return convBody() + explicitBody();
  }
}

}  // namespace gzero
