#include "gzero/oracle.hpp"

#include <cstdlib>

namespace oracle {

using gzero::Filter;
using gzero::FilterKind;
using gzero::ProdSet;
using gzero::SymSet;
using gzero::Universe;

CompactLine::CompactLine(const Universe& u, Point w) : u_(u) {
  const gzero::Interval dom = u.domain();
  const Point lo = dom.lo == gzero::kNegInf ? -w : dom.lo;
  const Point hi = dom.hi == gzero::kPosInf ? w : dom.hi;
  for (Point p = lo; p <= hi; ++p) pts_.push_back(p);
  bits_ = static_cast<int>(pts_.size());
  if (dom.lo == gzero::kNegInf) lowBit_ = bits_++;
  if (dom.hi == gzero::kPosInf) highBit_ = bits_++;
  full_ = (std::uint32_t{1} << bits_) - 1;
}

std::uint32_t CompactLine::encode(const SymSet& x) const {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (x.contains(pts_[i])) s |= std::uint32_t{1} << i;
  }
  if (lowBit_ >= 0 && x.contains(pts_.front() - 1)) s |= std::uint32_t{1} << lowBit_;
  if (highBit_ >= 0 && x.contains(pts_.back() + 1)) s |= std::uint32_t{1} << highBit_;
  return s;
}

SymSet CompactLine::decode(std::uint32_t s) const {
  std::vector<gzero::Interval> ivs;
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (s >> i & 1) ivs.push_back({pts_[i], pts_[i]});
  }
  if (lowBit_ >= 0 && (s >> lowBit_ & 1)) ivs.push_back({gzero::kNegInf, pts_.front() - 1});
  if (highBit_ >= 0 && (s >> highBit_ & 1)) ivs.push_back({pts_.back() + 1, gzero::kPosInf});
  return SymSet::fromIntervals(u_, ivs);
}

bool CompactLine::complementBoundedBelow(std::uint32_t s) const {
  return lowBit_ < 0 || (s >> lowBit_ & 1);
}

bool CompactLine::complementBoundedAbove(std::uint32_t s) const {
  return highBit_ < 0 || (s >> highBit_ & 1);
}

bool CompactLine::cofinite(std::uint32_t s) const {
  return complementBoundedBelow(s) && complementBoundedAbove(s);
}

std::uint32_t CompactLine::star(std::uint32_t s) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (!(s >> i & 1)) continue;
    Point q = u_.star(pts_[i]);
    out |= std::uint32_t{1} << static_cast<std::size_t>(q - pts_.front());
  }
  const bool swap = u_.starReversesOrder();
  if (lowBit_ >= 0 && (s >> lowBit_ & 1)) out |= std::uint32_t{1} << (swap ? highBit_ : lowBit_);
  if (highBit_ >= 0 && (s >> highBit_ & 1)) out |= std::uint32_t{1} << (swap ? lowBit_ : highBit_);
  return out;
}

CompactLine::Family CompactLine::atom(const std::function<bool(std::uint32_t)>& pred) const {
  Family f(size());
  for (std::uint32_t s = 0; s <= full_; ++s) f[s] = pred(s);
  return f;
}

std::optional<CompactLine::Family> CompactLine::family(const Filter& f) const {
  const std::string key = f.str();
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  auto fam = build(f);
  memo_.emplace(key, fam);
  return fam;
}

std::optional<CompactLine::Family> CompactLine::build(const Filter& f) const {
  switch (f.kind()) {
    case FilterKind::All: return atom([](std::uint32_t) { return true; });
    case FilterKind::Cof: return atom([&](std::uint32_t s) { return cofinite(s); });
    case FilterKind::Dcc: return atom([&](std::uint32_t s) { return complementBoundedBelow(s); });
    case FilterKind::Acc: return atom([&](std::uint32_t s) { return complementBoundedAbove(s); });
    case FilterKind::Principal: {
      std::uint32_t z = full_;
      for (const auto& b : f.sets()) z &= encode(std::get<SymSet>(b));
      return atom([z](std::uint32_t s) { return (s & z) == z; });
    }
    default: break;
  }
  std::vector<Family> k;
  for (const auto& c : f.kids()) {
    auto x = family(c);
    if (!x) return std::nullopt;
    k.push_back(std::move(*x));
  }
  // Families are upward closed, so the minimal members of b suffice.
  auto quotientOf = [&](const Family& a, const Family& b) {
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t t = 0; t <= full_; ++t) {
      if (!b[t]) continue;
      bool isMin = true;
      for (int i = 0; i < bits_ && isMin; ++i) {
        if ((t >> i & 1) && b[t & ~(std::uint32_t{1} << i)]) isMin = false;
      }
      if (isMin) minimal.push_back(t);
    }
    return atom([&](std::uint32_t s) {
      for (std::uint32_t t : minimal) {
        if (!a[s | t]) return false;
      }
      return true;
    });
  };
  switch (f.kind()) {
    case FilterKind::Meet: return atom([&](std::uint32_t s) { return k[0][s] && k[1][s]; });
    case FilterKind::Join: {
      Family out(size());
      std::vector<std::uint32_t> as, bs;
      for (std::uint32_t s = 0; s <= full_; ++s) {
        if (k[0][s]) as.push_back(s);
        if (k[1][s]) bs.push_back(s);
      }
      for (auto a : as) {
        for (auto b : bs) out[a & b] = true;
      }
      return out;
    }
    case FilterKind::Quotient: return quotientOf(k[0], k[1]);
    case FilterKind::Perp: {
      Family cof = atom([&](std::uint32_t s) { return cofinite(s); });
      return quotientOf(cof, k[0]);
    }
    case FilterKind::Star: return atom([&](std::uint32_t s) { return k[0][star(s)]; });
    case FilterKind::Induced: {
      std::uint32_t c = encode(std::get<SymSet>(f.sets()[0]));
      return atom([&](std::uint32_t s) { return (s & ~c) == 0 && k[0][s | (full_ & ~c)]; });
    }
    default: return std::nullopt;
  }
}

// Line atoms, read off far points of a semilinear set.

std::optional<bool> atomByScan(FilterKind atom, const std::function<bool(Point)>& in, Point w) {
  auto lowTail = [&] { return in(-2 * w) && in(-3 * w); };
  auto highTail = [&] { return in(2 * w) && in(3 * w); };
  switch (atom) {
    case FilterKind::All: return true;
    case FilterKind::Cof: return lowTail() && highTail();
    case FilterKind::Dcc: return lowTail();
    case FilterKind::Acc: return highTail();
    default: return std::nullopt;
  }
}

std::optional<bool> ProductWindow::lineMember(FilterKind atom,
                                              const std::function<bool(Point)>& in) const {
  return atomByScan(atom, in, w_);
}

namespace {

bool isAtom(FilterKind k) {
  return k == FilterKind::All || k == FilterKind::Cof || k == FilterKind::Dcc ||
         k == FilterKind::Acc;
}

FilterKind perpAtom(FilterKind k) {
  switch (k) {
    case FilterKind::All: return FilterKind::Cof;
    case FilterKind::Cof: return FilterKind::All;
    case FilterKind::Dcc: return FilterKind::Acc;
    default: return FilterKind::Dcc;
  }
}

// Smallest base member of a line atom at parameter r.
bool minimalBase(FilterKind k, Point r, Point p) {
  switch (k) {
    case FilterKind::All: return false;
    case FilterKind::Cof: return std::abs(p) > r;
    case FilterKind::Dcc: return p < -r;
    default: return p > r;
  }
}

// Points on the square ring of radius R.
template <class F>
bool anyOnRing(Point radius, F&& pred) {
  for (Point t = -radius; t <= radius; ++t) {
    if (pred(t, radius) || pred(t, -radius) || pred(radius, t) || pred(-radius, t)) return true;
  }
  return false;
}

template <class F>
bool anyInBox(Point radius, F&& pred) {
  for (Point h = -radius; h <= radius; ++h) {
    for (Point g = -radius; g <= radius; ++g) {
      if (pred(h, g)) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<bool> ProductWindow::member(const Filter& f, const ProdSet& x) const {
  const Point w = w_;
  auto out = [&](Point h, Point g) { return !x.contains(h, g); };
  auto finiteWhere = [&](auto&& pred) {
    return !anyOnRing(2 * w, pred) && !anyOnRing(3 * w, pred);
  };
  if (f.kind() == FilterKind::All) return true;
  if (f.kind() == FilterKind::Cof) return finiteWhere(out);
  if (f.kind() == FilterKind::Meet) {
    auto a = member(f.kid(0), x), b = member(f.kid(1), x);
    if (!a || !b) return std::nullopt;
    return *a && *b;
  }
  auto atomsOf = [](const Filter& p, FilterKind& a, FilterKind& b) {
    if (p.kids().size() != 2 || !isAtom(p.kid(0).kind()) || !isAtom(p.kid(1).kind())) {
      return false;
    }
    a = p.kid(0).kind();
    b = p.kid(1).kind();
    return true;
  };
  FilterKind a{}, b{};
  if (f.kind() == FilterKind::Perp) {
    const Filter& inner = f.kid(0);
    const Point r = w;
    if (inner.kind() == FilterKind::Tensor && atomsOf(inner, a, b)) {
      return finiteWhere([&](Point h, Point g) {
        return out(h, g) && !minimalBase(a, r, h) && !minimalBase(b, r, g);
      });
    }
    if (inner.kind() == FilterKind::Perp && inner.kid(0).kind() == FilterKind::Tensor &&
        atomsOf(inner.kid(0), a, b)) {
      return finiteWhere([&](Point h, Point g) {
        return out(h, g) && (minimalBase(a, r, h) || minimalBase(b, r, g));
      });
    }
    return std::nullopt;
  }
  if (!atomsOf(f, a, b)) return std::nullopt;
  const Point r = w;
  switch (f.kind()) {
    case FilterKind::Tensor: {
      auto rowClear = [&](Point h) {
        const Point span = std::abs(h) + 2 * w;
        for (Point g = -span; g <= span; ++g) {
          if (out(h, g)) return false;
        }
        return true;
      };
      auto colClear = [&](Point g) {
        const Point span = std::abs(g) + 2 * w;
        for (Point h = -span; h <= span; ++h) {
          if (out(h, g)) return false;
        }
        return true;
      };
      return *lineMember(a, rowClear) && *lineMember(b, colClear);
    }
    case FilterKind::TimesProd:
      if (a == FilterKind::All || b == FilterKind::All) return true;
      return !anyInBox(3 * w, [&](Point h, Point g) {
        return minimalBase(a, r, h) && minimalBase(b, r, g) && out(h, g);
      });
    case FilterKind::CofPair:
      return !anyInBox(3 * w, [&](Point h, Point g) {
        const bool rows = std::abs(h) <= r && !minimalBase(b, r, g);
        const bool cols = !minimalBase(a, r, h) && std::abs(g) <= r;
        return out(h, g) && !rows && !cols;
      });
    case FilterKind::Angle: {
      const FilterKind pa = perpAtom(a), pb = perpAtom(b);
      auto rowOk = [&](Point h) {  // (h, t) ∈ X for every t outside the base of perp F_G
        const Point span = std::abs(h) + 2 * w;
        for (Point t = -span; t <= span; ++t) {
          if (!minimalBase(pb, r, t) && out(h, t)) return false;
        }
        return true;
      };
      auto colOk = [&](Point g) {
        const Point span = std::abs(g) + 2 * w;
        for (Point s = -span; s <= span; ++s) {
          if (!minimalBase(pa, r, s) && out(s, g)) return false;
        }
        return true;
      };
      return *lineMember(a, rowOk) && *lineMember(b, colOk);
    }
    default: return std::nullopt;
  }
}

}  // namespace oracle

namespace oracle {

Dense dense(const gzero::SymMatrix& m) {
  const auto rows = static_cast<Point>(m.rowUniverse().size());
  const auto cols = static_cast<Point>(m.colUniverse().size());
  Dense d(rows);
  for (Point h = 0; h < rows; ++h) {
    for (Point g = 0; g < cols; ++g) d[h].push_back(m.at(h, g));
  }
  return d;
}

Dense twistedProduct(const Dense& a, const Dense& b, const Universe& middle) {
  const gzero::ScalarKind kind = a.front().front().kind();
  Dense out(a.size(), std::vector<gzero::DivisionScalar>(b.front().size(),
                                                         gzero::DivisionScalar::zero(kind)));
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t g = 0; g < b.front().size(); ++g) {
      for (std::size_t h = 0; h < b.size(); ++h) {
        out[j][g] += a[j][middle.star(static_cast<Point>(h))] * b[h][g];
      }
    }
  }
  return out;
}

gzero::DivisionScalar windowProduct(const Entry& a, const Entry& b, const Universe& middle,
                                    Point j, Point g, Point w, gzero::ScalarKind kind) {
  auto total = gzero::DivisionScalar::zero(kind);
  for (Point h = -w; h <= w; ++h) {
    if (middle.contains(h)) total += a(j, middle.star(h)) * b(h, g);
  }
  return total;
}

}  // namespace oracle
