#include "gzero/symset.hpp"

#include <algorithm>
#include <cstdlib>

#include "gzero/error.hpp"

namespace gzero {

SymSet SymSet::full(const Universe& u) {
  SymSet s(u);
  s.iv_.push_back(u.domain());
  return s;
}

SymSet SymSet::interval(const Universe& u, Point lo, Point hi) {
  return fromIntervals(u, {{lo, hi}});
}

SymSet SymSet::points(const Universe& u, const std::vector<Point>& pts) {
  std::vector<Interval> ivs;
  ivs.reserve(pts.size());
  for (Point p : pts) ivs.push_back({p, p});
  return fromIntervals(u, std::move(ivs));
}

SymSet SymSet::fromIntervals(const Universe& u, std::vector<Interval> ivs) {
  SymSet s(u);
  s.iv_ = std::move(ivs);
  s.canonicalize();
  return s;
}

void SymSet::canonicalize() {
  if (u_.isProduct()) throw UnsupportedUniverse("SymSet over a product universe");
  const Interval dom = u_.domain();
  std::vector<Interval> clipped;
  for (const auto& iv : iv_) {
    Interval c = meet(iv, dom);
    if (!c.empty()) clipped.push_back(c);
  }
  std::sort(clipped.begin(), clipped.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const auto& iv : clipped) {
    if (!out.empty() && (out.back().hi == kPosInf || iv.lo <= out.back().hi + 1)) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  iv_ = std::move(out);
}

bool SymSet::contains(Point p) const {
  auto it = std::upper_bound(iv_.begin(), iv_.end(), p,
                             [](Point x, const Interval& iv) { return x < iv.lo; });
  if (it == iv_.begin()) return false;
  return std::prev(it)->contains(p);
}

bool SymSet::isFull() const { return iv_.size() == 1 && iv_.front() == u_.domain(); }

bool SymSet::isFinite() const {
  return iv_.empty() || (iv_.front().lo != kNegInf && iv_.back().hi != kPosInf);
}

bool SymSet::isCofinite() const { return complement().isFinite(); }

std::size_t SymSet::count() const {
  if (!isFinite()) throw Error("count of an infinite set");
  std::size_t n = 0;
  for (const auto& iv : iv_) n += static_cast<std::size_t>(iv.hi - iv.lo + 1);
  return n;
}

std::vector<Point> SymSet::elements() const {
  if (!isFinite()) throw Error("elements of an infinite set");
  std::vector<Point> out;
  for (const auto& iv : iv_) {
    for (Point p = iv.lo; p <= iv.hi; ++p) out.push_back(p);
  }
  return out;
}

bool SymSet::boundedBelow() const { return iv_.empty() || iv_.front().lo != kNegInf; }
bool SymSet::boundedAbove() const { return iv_.empty() || iv_.back().hi != kPosInf; }
bool SymSet::hasLowerRay() const { return !boundedBelow(); }
bool SymSet::hasUpperRay() const { return !boundedAbove(); }

bool SymSet::hasDCC() const {
  if (!u_.hasOrder()) throw UnsupportedUniverse("d.c.c. needs an ordered universe");
  return boundedBelow();
}

bool SymSet::hasACC() const {
  if (!u_.hasOrder()) throw UnsupportedUniverse("a.c.c. needs an ordered universe");
  return boundedAbove();
}

std::optional<Point> SymSet::min() const {
  if (iv_.empty() || iv_.front().lo == kNegInf) return std::nullopt;
  return iv_.front().lo;
}

std::optional<Point> SymSet::max() const {
  if (iv_.empty() || iv_.back().hi == kPosInf) return std::nullopt;
  return iv_.back().hi;
}

SymSet SymSet::complement() const {
  const Interval dom = u_.domain();
  std::vector<Interval> out;
  Point cursor = dom.lo;
  bool open = true;  // cursor still inside the domain
  for (const auto& iv : iv_) {
    if (iv.lo != kNegInf && cursor <= iv.lo - 1) out.push_back({cursor, iv.lo - 1});
    if (iv.hi == kPosInf) {
      open = false;
      break;
    }
    cursor = iv.hi + 1;
  }
  if (open && cursor <= dom.hi) out.push_back({cursor, dom.hi});
  return fromIntervals(u_, std::move(out));
}

SymSet SymSet::star() const {
  switch (u_.involution()) {
    case Involution::Identity: return *this;
    case Involution::Negate: {
      std::vector<Interval> out;
      for (const auto& iv : iv_) out.push_back({negBound(iv.hi), negBound(iv.lo)});
      return fromIntervals(u_, std::move(out));
    }
    case Involution::Permutation: {
      std::vector<Point> pts;
      for (Point p : elements()) pts.push_back(u_.star(p));
      return points(u_, pts);
    }
  }
  return *this;
}

bool SymSet::subsetOf(const SymSet& other) const {
  requireSameUniverse(u_, other.u_, "subsetOf");
  return minus(*this, other).isEmpty();
}

Point SymSet::maxAbsConstant() const {
  Point m = 0;
  for (const auto& iv : iv_) {
    if (iv.lo != kNegInf) m = std::max(m, std::abs(iv.lo));
    if (iv.hi != kPosInf) m = std::max(m, std::abs(iv.hi));
  }
  return m;
}

SymSet unite(const SymSet& a, const SymSet& b) {
  requireSameUniverse(a.u_, b.u_, "union");
  std::vector<Interval> all = a.iv_;
  all.insert(all.end(), b.iv_.begin(), b.iv_.end());
  return SymSet::fromIntervals(a.u_, std::move(all));
}

SymSet intersect(const SymSet& a, const SymSet& b) {
  requireSameUniverse(a.u_, b.u_, "intersection");
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < a.iv_.size() && j < b.iv_.size()) {
    Interval m = meet(a.iv_[i], b.iv_[j]);
    if (!m.empty()) out.push_back(m);
    if (a.iv_[i].hi < b.iv_[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return SymSet::fromIntervals(a.u_, std::move(out));
}

SymSet minus(const SymSet& a, const SymSet& b) { return intersect(a, b.complement()); }

bool operator==(const SymSet& a, const SymSet& b) { return a.u_ == b.u_ && a.iv_ == b.iv_; }

std::string intervalStr(const Interval& iv) {
  std::string s = iv.lo == kNegInf ? "(-inf.." : "[" + std::to_string(iv.lo) + "..";
  s += iv.hi == kPosInf ? "inf)" : std::to_string(iv.hi) + "]";
  return s;
}

std::string SymSet::str() const {
  if (iv_.empty()) return "{}";
  if (iv_.size() == 1) return intervalStr(iv_.front());
  std::string s = "union(";
  for (std::size_t i = 0; i < iv_.size(); ++i) s += (i ? ", " : "") + intervalStr(iv_[i]);
  return s + ")";
}

}  // namespace gzero
