#include "gzero/prodset.hpp"

#include <algorithm>
#include <cstdlib>

#include "gzero/error.hpp"

namespace gzero {

namespace {

bool finite(Point p) { return p != kNegInf && p != kPosInf; }

const Interval kFull{kNegInf, kPosInf};

Interval rowRange(const Cell& c, Point h) {
  Interval r = c.g;
  r = meet(r, {addBound(c.s.lo, -h), addBound(c.s.hi, -h)});
  r = meet(r, {addBound(c.d.lo, h), addBound(c.d.hi, h)});
  return r;
}

Interval columnRange(const Cell& c, Point g) {
  Interval r = c.h;
  r = meet(r, {addBound(c.s.lo, -g), addBound(c.s.hi, -g)});
  r = meet(r, {addBound(g, negBound(c.d.hi)), addBound(g, negBound(c.d.lo))});
  return r;
}

Interval* slot(Cell& c, int var) {
  switch (var) {
    case 0: return &c.h;
    case 1: return &c.g;
    case 2: return &c.s;
    default: return &c.d;
  }
}

}  // namespace

bool Cell::contains(Point hp, Point gp) const {
  return h.contains(hp) && g.contains(gp) && s.contains(hp + gp) && d.contains(gp - hp);
}

Interval Cell::projectH() const {
  if (g.empty() || s.empty() || d.empty() || h.empty()) return {1, 0};
  Interval r = h;
  if (finite(s.hi) && finite(g.lo)) r.hi = std::min(r.hi, s.hi - g.lo);
  if (finite(g.lo) && finite(d.hi)) r.lo = std::max(r.lo, g.lo - d.hi);
  if (finite(s.lo) && finite(g.hi)) r.lo = std::max(r.lo, s.lo - g.hi);
  if (finite(s.lo) && finite(d.hi)) r.lo = std::max(r.lo, ceilDiv2(s.lo - d.hi));
  if (finite(g.hi) && finite(d.lo)) r.hi = std::min(r.hi, g.hi - d.lo);
  if (finite(s.hi) && finite(d.lo)) r.hi = std::min(r.hi, floorDiv2(s.hi - d.lo));
  return r;
}

Interval Cell::projectG() const {
  if (g.empty() || s.empty() || d.empty() || h.empty()) return {1, 0};
  Interval r = g;
  if (finite(s.hi) && finite(h.lo)) r.hi = std::min(r.hi, s.hi - h.lo);
  if (finite(h.lo) && finite(d.lo)) r.lo = std::max(r.lo, h.lo + d.lo);
  if (finite(s.lo) && finite(h.hi)) r.lo = std::max(r.lo, s.lo - h.hi);
  if (finite(s.lo) && finite(d.lo)) r.lo = std::max(r.lo, ceilDiv2(s.lo + d.lo));
  if (finite(h.hi) && finite(d.hi)) r.hi = std::min(r.hi, h.hi + d.hi);
  if (finite(s.hi) && finite(d.hi)) r.hi = std::min(r.hi, floorDiv2(s.hi + d.hi));
  return r;
}

bool Cell::rowSectionsFinite() const {
  return (finite(g.hi) || finite(s.hi) || finite(d.hi)) &&
         (finite(g.lo) || finite(s.lo) || finite(d.lo));
}

bool Cell::columnSectionsFinite() const {
  return (finite(h.hi) || finite(s.hi) || finite(d.lo)) &&
         (finite(h.lo) || finite(s.lo) || finite(d.hi));
}

ProdSet::ProdSet(Universe u) : u_(std::move(u)) {
  if (!u_.isProduct()) throw UniverseMismatch("ProdSet needs a product universe");
}

std::optional<Cell> ProdSet::normalize(Cell c) const {
  c.h = meet(c.h, u_.left().domain());
  c.g = meet(c.g, u_.right().domain());
  Interval ph = c.projectH();
  if (ph.empty()) return std::nullopt;
  c.h = ph;
  c.g = c.projectG();
  if (c.g.empty()) return std::nullopt;
  const Interval sImplied{addBound(c.h.lo, c.g.lo), addBound(c.h.hi, c.g.hi)};
  c.s = (c.s.lo <= sImplied.lo && c.s.hi >= sImplied.hi) ? kFull : meet(c.s, sImplied);
  const Interval dImplied{addBound(c.g.lo, negBound(c.h.hi)), addBound(c.g.hi, negBound(c.h.lo))};
  c.d = (c.d.lo <= dImplied.lo && c.d.hi >= dImplied.hi) ? kFull : meet(c.d, dImplied);
  return c;
}

void ProdSet::addCell(const Cell& c) {
  if (auto n = normalize(c)) cells_.push_back(*n);
}

ProdSet ProdSet::full(const Universe& u) {
  ProdSet p(u);
  p.addCell({u.left().domain(), u.right().domain(), kFull, kFull});
  return p;
}

ProdSet ProdSet::rect(const Universe& u, const SymSet& b, const SymSet& a) {
  requireSameUniverse(b.universe(), u.left(), "rect (H factor)");
  requireSameUniverse(a.universe(), u.right(), "rect (G factor)");
  ProdSet p(u);
  for (const auto& hb : b.intervals()) {
    for (const auto& ga : a.intervals()) p.addCell({hb, ga, kFull, kFull});
  }
  p.simplify();
  return p;
}

ProdSet ProdSet::stripe(const Universe& u, StripeKey key, const SymSet& values) {
  if (values.universe().kind() != UniverseKind::IntLine) {
    throw UniverseMismatch("stripe values must be a set of integers");
  }
  ProdSet p(u);
  for (const auto& iv : values.intervals()) {
    Cell c{kFull, kFull, kFull, kFull};
    (key == StripeKey::Sum ? c.s : c.d) = iv;
    p.addCell(c);
  }
  p.simplify();
  return p;
}

ProdSet ProdSet::cell(const Universe& u, const Cell& c) {
  ProdSet p(u);
  p.addCell(c);
  return p;
}

ProdSet ProdSet::points(const Universe& u, const std::vector<std::pair<Point, Point>>& pts) {
  ProdSet p(u);
  for (auto [h, g] : pts) {
    if (p.contains(h, g)) continue;
    p.addCell({{h, h}, {g, g}, kFull, kFull});
  }
  p.simplify();
  return p;
}

bool ProdSet::contains(Point h, Point g) const {
  return std::any_of(cells_.begin(), cells_.end(),
                     [&](const Cell& c) { return c.contains(h, g); });
}

bool ProdSet::isFinite() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const Cell& c) { return c.h.bounded() && c.g.bounded(); });
}

bool ProdSet::isCofinite() const { return complement().isFinite(); }

std::vector<Cell> ProdSet::complementCell(const Cell& c) const {
  std::vector<Cell> out;
  Cell prefix{u_.left().domain(), u_.right().domain(), kFull, kFull};
  for (int var = 0; var < 4; ++var) {
    const Interval iv = *slot(const_cast<Cell&>(c), var);
    if (iv.lo != kNegInf) {
      Cell piece = prefix;
      *slot(piece, var) = meet(*slot(piece, var), {kNegInf, iv.lo - 1});
      if (auto n = normalize(piece)) out.push_back(*n);
    }
    if (iv.hi != kPosInf) {
      Cell piece = prefix;
      *slot(piece, var) = meet(*slot(piece, var), {iv.hi + 1, kPosInf});
      if (auto n = normalize(piece)) out.push_back(*n);
    }
    *slot(prefix, var) = meet(*slot(prefix, var), iv);
  }
  return out;
}

ProdSet ProdSet::complement() const {
  ProdSet result = full(u_);
  for (const auto& c : cells_) {
    std::vector<Cell> comp = complementCell(c);
    ProdSet next(u_);
    for (const auto& a : result.cells_) {
      for (const auto& b : comp) {
        next.addCell({meet(a.h, b.h), meet(a.g, b.g), meet(a.s, b.s), meet(a.d, b.d)});
      }
    }
    next.simplify();
    result = std::move(next);
  }
  return result;
}

void ProdSet::simplify() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cells_.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < cells_.size() && !changed; ++j) {
        Cell& a = cells_[i];
        const Cell& b = cells_[j];
        int differing = -1;
        int count = 0;
        for (int var = 0; var < 4; ++var) {
          if (!(*slot(a, var) == *slot(const_cast<Cell&>(b), var))) {
            differing = var;
            ++count;
          }
        }
        if (count != 1) continue;
        Interval x = *slot(a, differing);
        Interval y = *slot(const_cast<Cell&>(b), differing);
        if (x.lo > y.lo) std::swap(x, y);
        if (x.hi != kPosInf && y.lo > x.hi + 1) continue;
        Cell merged = a;
        *slot(merged, differing) = {x.lo, std::max(x.hi, y.hi)};
        auto n = normalize(merged);
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(j));
        cells_[i] = *n;
        changed = true;
      }
    }
  }
}

bool ProdSet::subsetOf(const ProdSet& other) const { return minus(*this, other).isEmpty(); }

SymSet ProdSet::projectH() const {
  std::vector<Interval> ivs;
  for (const auto& c : cells_) ivs.push_back(c.h);
  return SymSet::fromIntervals(u_.left(), std::move(ivs));
}

SymSet ProdSet::projectG() const {
  std::vector<Interval> ivs;
  for (const auto& c : cells_) ivs.push_back(c.g);
  return SymSet::fromIntervals(u_.right(), std::move(ivs));
}

SymSet ProdSet::rowSection(Point h) const {
  std::vector<Interval> ivs;
  for (const auto& c : cells_) {
    if (c.h.contains(h)) ivs.push_back(rowRange(c, h));
  }
  return SymSet::fromIntervals(u_.right(), std::move(ivs));
}

SymSet ProdSet::columnSection(Point g) const {
  std::vector<Interval> ivs;
  for (const auto& c : cells_) {
    if (c.g.contains(g)) ivs.push_back(columnRange(c, g));
  }
  return SymSet::fromIntervals(u_.left(), std::move(ivs));
}

std::optional<Point> ProdSet::infiniteRowWitness() const {
  for (const auto& c : cells_) {
    if (!c.rowSectionsFinite()) return std::clamp<Point>(0, c.h.lo, c.h.hi);
  }
  return std::nullopt;
}

std::optional<Point> ProdSet::infiniteColumnWitness() const {
  for (const auto& c : cells_) {
    if (!c.columnSectionsFinite()) return std::clamp<Point>(0, c.g.lo, c.g.hi);
  }
  return std::nullopt;
}

Point ProdSet::maxAbsConstant() const {
  Point m = 0;
  auto upd = [&](const Interval& iv) {
    if (finite(iv.lo)) m = std::max(m, std::abs(iv.lo));
    if (finite(iv.hi)) m = std::max(m, std::abs(iv.hi));
  };
  for (const auto& c : cells_) {
    upd(c.h);
    upd(c.g);
    upd(c.s);
    upd(c.d);
  }
  return m;
}

std::vector<std::pair<Point, Point>> ProdSet::elements() const {
  if (!isFinite()) throw Error("elements of an infinite product set");
  std::vector<std::pair<Point, Point>> out;
  for (const auto& c : cells_) {
    for (Point h = c.h.lo; h <= c.h.hi; ++h) {
      Interval r = rowRange(c, h);
      for (Point g = r.lo; g <= r.hi; ++g) out.emplace_back(h, g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProdSet unite(const ProdSet& a, const ProdSet& b) {
  requireSameUniverse(a.u_, b.u_, "union");
  ProdSet out = a;
  ProdSet rest = minus(b, a);
  out.cells_.insert(out.cells_.end(), rest.cells_.begin(), rest.cells_.end());
  out.simplify();
  return out;
}

ProdSet intersect(const ProdSet& a, const ProdSet& b) {
  requireSameUniverse(a.u_, b.u_, "intersection");
  ProdSet out(a.u_);
  for (const auto& x : a.cells_) {
    for (const auto& y : b.cells_) {
      out.addCell({meet(x.h, y.h), meet(x.g, y.g), meet(x.s, y.s), meet(x.d, y.d)});
    }
  }
  out.simplify();
  return out;
}

ProdSet minus(const ProdSet& a, const ProdSet& b) {
  if (b.isEmpty() || a.isEmpty()) return a;
  return intersect(a, b.complement());
}

bool operator==(const ProdSet& a, const ProdSet& b) {
  return a.u_ == b.u_ && minus(a, b).isEmpty() && minus(b, a).isEmpty();
}

std::string cellStr(const Cell& c) {
  std::string s = "cell(";
  bool first = true;
  auto add = [&](const char* name, const Interval& iv) {
    if (iv == kFull) return;
    s += (first ? "" : ", ") + std::string(name) + ":" + intervalStr(iv);
    first = false;
  };
  add("h", c.h);
  add("g", c.g);
  add("s", c.s);
  add("d", c.d);
  return s + ")";
}

std::string ProdSet::str() const {
  if (cells_.empty()) return "{}";
  if (cells_.size() == 1) return cellStr(cells_.front());
  std::string s = "union(";
  for (std::size_t i = 0; i < cells_.size(); ++i) s += (i ? ", " : "") + cellStr(cells_[i]);
  return s + ")";
}

}  // namespace gzero
