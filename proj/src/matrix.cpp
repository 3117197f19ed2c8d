#include "gzero/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "filter_engine.hpp"
#include "gzero/error.hpp"

namespace gzero {

namespace {

const Universe kZ = Universe::intLine();

bool isLine(const Universe& u) {
  return u.kind() == UniverseKind::IntLine || u.kind() == UniverseKind::IntHalfLine;
}

// −1 when the involution negates, +1 when it fixes every point.
Point twistSign(const Universe& u) { return u.involution() == Involution::Negate ? -1 : 1; }

Point keyOf(StripeKey key, Point h, Point g) { return key == StripeKey::Sum ? h + g : g - h; }

FormalSum onIntegers(const FormalSum& f) {
  if (f.universe() == kZ) return f;
  return FormalSum::tabulate(kZ, f.kind(), f.layout(), [&](Point n) { return f.at(n); }, f.side());
}

}  // namespace

/// n ↦ f(αn + β) on U, α = ±1.
FormalSum affineView(const FormalSum& f, Point alpha, Point beta, const Universe& u, Side side) {
  if (f.isZero()) return FormalSum(u, f.kind(), side);
  FormalSum::Layout l = f.layout(), r;
  if (alpha == 1) {
    r.lo = l.lo - beta;
    r.hi = l.hi - beta;
    r.upPeriod = l.upPeriod;
    r.lowPeriod = l.lowPeriod;
  } else {
    r.lo = beta - l.hi;
    r.hi = beta - l.lo;
    r.upPeriod = l.lowPeriod;
    r.lowPeriod = l.upPeriod;
  }
  return FormalSum::tabulate(u, f.kind(), r, [&](Point n) { return f.at(alpha * n + beta); },
                             side);
}

SymMatrix SymMatrix::explicitMatrix(
    const Universe& h, const Universe& g, ScalarKind kind,
    const std::map<std::pair<Point, Point>, DivisionScalar>& entries) {
  if (h.isProduct() || g.isProduct()) throw UnsupportedUniverse("matrix factors must be lines");
  SymMatrix m;
  m.form_ = MatrixForm::Explicit;
  m.h_ = h;
  m.g_ = g;
  m.kind_ = kind;
  for (const auto& [p, v] : entries) {
    if (!h.contains(p.first) || !g.contains(p.second)) {
      throw UniverseMismatch("matrix entry outside " + h.str() + " x " + g.str());
    }
    if (v.kind() != kind) throw TypeError("matrix mixes scalar kinds");
    if (!v.isZero()) m.entries_.emplace(p, v);
  }
  return m;
}

SymMatrix SymMatrix::finitary(const Universe& h, const Universe& g, ScalarKind kind,
                              std::vector<RankOne> terms) {
  SymMatrix m;
  m.form_ = MatrixForm::Finitary;
  m.h_ = h;
  m.g_ = g;
  m.kind_ = kind;
  for (auto& t : terms) {
    if (!(t.column.universe() == h) || !(t.row.universe() == g)) {
      throw UniverseMismatch("rank-one term over the wrong universes");
    }
    if (t.column.kind() != kind || t.row.kind() != kind) throw TypeError("matrix mixes scalar kinds");
    if (t.column.isZero() || t.row.isZero()) continue;
    m.terms_.push_back({t.column.asColumn(), t.row.asRow()});
  }
  return m;
}

SymMatrix SymMatrix::convolution(const Universe& h, const Universe& g, const FormalSum& kernel,
                                 StripeKey key) {
  if (!isLine(h) || !isLine(g)) {
    throw UnsupportedUniverse("convolution matrices need integer universes");
  }
  if (kernel.universe().kind() != UniverseKind::IntLine) {
    throw UniverseMismatch("convolution kernel must live on the integers");
  }
  SymMatrix m;
  m.form_ = MatrixForm::Convolution;
  m.h_ = h;
  m.g_ = g;
  m.kind_ = kernel.kind();
  m.kernel_ = onIntegers(kernel);
  m.key_ = key;
  return m;
}

SymMatrix SymMatrix::identity(const Universe& u, ScalarKind kind) {
  const DivisionScalar one = DivisionScalar::one(kind);
  if (u.isFinite()) {
    std::map<std::pair<Point, Point>, DivisionScalar> e;
    for (Point p = 0; p < static_cast<Point>(u.size()); ++p) e.emplace(std::pair{p, u.star(p)}, one);
    return explicitMatrix(u, u, kind, e);
  }
  const StripeKey key = twistSign(u) == -1 ? StripeKey::Sum : StripeKey::Diff;
  return convolution(u, u, FormalSum::delta(kZ, 0, one), key);
}

SymMatrix SymMatrix::translationOp(Point s, const DivisionScalar& k) {
  return convolution(kZ, kZ, FormalSum::delta(kZ, s, k), StripeKey::Sum);
}

DivisionScalar SymMatrix::at(Point h, Point g) const {
  DivisionScalar total = DivisionScalar::zero(kind_);
  switch (form_) {
    case MatrixForm::Explicit: {
      auto it = entries_.find({h, g});
      if (it != entries_.end()) total = it->second;
      break;
    }
    case MatrixForm::Finitary:
      for (const auto& t : terms_) total += t.column.at(h) * t.row.at(g);
      break;
    case MatrixForm::Convolution: total = kernel_.at(keyOf(key_, h, g)); break;
    case MatrixForm::Sum:
      for (const auto& p : parts_) total += p.at(h, g);
      break;
  }
  return total;
}

FormalSum SymMatrix::rowAt(Point h) const {
  switch (form_) {
    case MatrixForm::Explicit: {
      std::map<Point, DivisionScalar> vals;
      for (auto it = entries_.lower_bound({h, kNegInf}); it != entries_.end() && it->first.first == h;
           ++it) {
        vals.emplace(it->first.second, it->second);
      }
      return FormalSum::fromMap(g_, kind_, vals).asRow();
    }
    case MatrixForm::Finitary: {
      FormalSum total(g_, kind_, Side::Row);
      for (const auto& t : terms_) total = total + scaleLeft(t.column.at(h), t.row);
      return total;
    }
    case MatrixForm::Convolution:
      return affineView(kernel_, 1, key_ == StripeKey::Sum ? h : -h, g_, Side::Row);
    case MatrixForm::Sum: break;
  }
  FormalSum total(g_, kind_, Side::Row);
  for (const auto& p : parts_) total = total + p.rowAt(h);
  return total;
}

FormalSum SymMatrix::columnAt(Point g) const {
  switch (form_) {
    case MatrixForm::Explicit: {
      std::map<Point, DivisionScalar> vals;
      for (const auto& [p, v] : entries_) {
        if (p.second == g) vals.emplace(p.first, v);
      }
      return FormalSum::fromMap(h_, kind_, vals);
    }
    case MatrixForm::Finitary: {
      FormalSum total(h_, kind_);
      for (const auto& t : terms_) total = total + scaleRight(t.column, t.row.at(g));
      return total;
    }
    case MatrixForm::Convolution:
      return key_ == StripeKey::Sum ? affineView(kernel_, 1, g, h_, Side::Column)
                                    : affineView(kernel_, -1, g, h_, Side::Column);
    case MatrixForm::Sum: break;
  }
  FormalSum total(h_, kind_);
  for (const auto& p : parts_) total = total + p.columnAt(g);
  return total;
}

namespace {

ProdSet finitarySupport(const SymMatrix& m) {
  const Universe u = m.productUniverse();
  ProdSet out = ProdSet::empty(u);
  if (m.terms().empty()) return out;
  FormalSum::Layout l = m.terms().front().column.layout();
  for (const auto& t : m.terms()) l = joinLayouts(l, t.column.layout());
  const Interval dom = m.rowUniverse().domain();
  const Point lo = std::max(l.lo, dom.lo), hi = std::min(l.hi, dom.hi);
  auto add = [&](Point a, Point b, const SymSet& s) {
    if (a > b || s.isEmpty()) return;
    out = unite(out, ProdSet::rect(u, SymSet::interval(m.rowUniverse(), a, b), s));
  };
  Point runStart = lo;
  SymSet run = SymSet::empty(m.colUniverse());
  for (Point p = lo; p <= hi; ++p) {
    SymSet s = m.rowAt(p).support();
    if (p == lo) {
      run = s;
    } else if (!(s == run)) {
      add(runStart, p - 1, run);
      runStart = p;
      run = s;
    }
  }
  if (lo <= hi) add(runStart, hi, run);
  auto tail = [&](std::optional<std::size_t> period, Point first, int dir, Interval ray) {
    if (!period) return;
    SymSet s = m.rowAt(first).support();
    for (std::size_t r = 1; r < *period; ++r) {
      if (!(m.rowAt(first + dir * static_cast<Point>(r)).support() == s)) {
        throw UnrepresentableResult("row supports of a finitary matrix vary with a congruence class");
      }
    }
    add(ray.lo, ray.hi, s);
  };
  if (dom.hi == kPosInf) tail(l.upPeriod, l.hi + 1, 1, {l.hi + 1, kPosInf});
  if (dom.lo == kNegInf) tail(l.lowPeriod, l.lo - 1, -1, {kNegInf, l.lo - 1});
  return out;
}

}  // namespace

ProdSet SymMatrix::support() const {
  const Universe u = productUniverse();
  switch (form_) {
    case MatrixForm::Explicit: {
      std::vector<std::pair<Point, Point>> pts;
      for (const auto& e : entries_) pts.push_back(e.first);
      return ProdSet::points(u, pts);
    }
    case MatrixForm::Finitary: return finitarySupport(*this);
    case MatrixForm::Convolution: return ProdSet::stripe(u, key_, kernel_.support());
    case MatrixForm::Sum: break;
  }
  std::optional<SymMatrix> conv, rest;
  for (const auto& p : parts_) {
    if (p.form_ != MatrixForm::Convolution) {
      rest = p;
    } else if (conv) {
      throw UnrepresentableResult("support of a sum of convolutions along both diagonals");
    } else {
      conv = p;
    }
  }
  ProdSet finite = rest->support();
  if (!finite.isFinite()) {
    throw UnrepresentableResult("support of a convolution plus an infinite finitary matrix");
  }
  std::vector<std::pair<Point, Point>> kept;
  for (const auto& [h, g] : finite.elements()) {
    if (!at(h, g).isZero()) kept.emplace_back(h, g);
  }
  return unite(minus(conv->support(), finite), ProdSet::points(u, kept));
}

Point SymMatrix::maxAbsConstant() const {
  Point m = 0;
  for (const auto& e : entries_) {
    m = std::max({m, std::abs(e.first.first), std::abs(e.first.second)});
  }
  for (const auto& t : terms_) m = std::max({m, t.column.maxAbsConstant(), t.row.maxAbsConstant()});
  if (form_ == MatrixForm::Convolution) m = std::max(m, kernel_.maxAbsConstant());
  for (const auto& p : parts_) m = std::max(m, p.maxAbsConstant());
  return m;
}

SymMatrix SymMatrix::asFinitary() const {
  if (form_ != MatrixForm::Explicit) return *this;
  std::vector<RankOne> terms;
  for (const auto& [p, v] : entries_) {
    terms.push_back({FormalSum::delta(h_, p.first, v), FormalSum::delta(g_, p.second, DivisionScalar::one(kind_))});
  }
  return finitary(h_, g_, kind_, std::move(terms));
}

SymMatrix scaleLeft(const DivisionScalar& k, const SymMatrix& m) {
  if (k.kind() != m.kind()) throw TypeError("matrix mixes scalar kinds");
  switch (m.form()) {
    case MatrixForm::Explicit: {
      auto e = m.entries();
      for (auto& [p, v] : e) v = k * v;
      return SymMatrix::explicitMatrix(m.rowUniverse(), m.colUniverse(), m.kind(), e);
    }
    case MatrixForm::Finitary: {
      auto terms = m.terms();
      for (auto& t : terms) t.column = scaleLeft(k, t.column);
      return SymMatrix::finitary(m.rowUniverse(), m.colUniverse(), m.kind(), std::move(terms));
    }
    case MatrixForm::Convolution:
      return SymMatrix::convolution(m.rowUniverse(), m.colUniverse(), scaleLeft(k, m.kernel()), m.key());
    case MatrixForm::Sum: break;
  }
  SymMatrix total = scaleLeft(k, m.parts().front());
  for (std::size_t i = 1; i < m.parts().size(); ++i) total = total + scaleLeft(k, m.parts()[i]);
  return total;
}

SymMatrix SymMatrix::operator-() const { return scaleLeft(-DivisionScalar::one(kind_), *this); }

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (!(a.h_ == b.h_) || !(a.g_ == b.g_)) throw UniverseMismatch("matrix sum over different universes");
  if (a.kind_ != b.kind_) throw TypeError("matrix mixes scalar kinds");
  std::vector<SymMatrix> flat;
  for (const SymMatrix* m : {&a, &b}) {
    if (m->form_ == MatrixForm::Sum) {
      flat.insert(flat.end(), m->parts_.begin(), m->parts_.end());
    } else {
      flat.push_back(*m);
    }
  }
  std::optional<FormalSum> kernS, kernD;
  std::map<std::pair<Point, Point>, DivisionScalar> entries;
  std::vector<RankOne> terms;
  bool anyFinitary = false;
  for (const auto& m : flat) {
    switch (m.form_) {
      case MatrixForm::Explicit:
        for (const auto& [p, v] : m.entries_) {
          auto [it, fresh] = entries.emplace(p, v);
          if (!fresh) it->second += v;
        }
        break;
      case MatrixForm::Finitary:
        anyFinitary = true;
        terms.insert(terms.end(), m.terms_.begin(), m.terms_.end());
        break;
      case MatrixForm::Convolution: {
        auto& k = m.key_ == StripeKey::Sum ? kernS : kernD;
        k = k ? *k + m.kernel_ : m.kernel_;
        break;
      }
      case MatrixForm::Sum: break;
    }
  }
  std::vector<SymMatrix> parts;
  if (kernS && !kernS->isZero()) parts.push_back(SymMatrix::convolution(a.h_, a.g_, *kernS, StripeKey::Sum));
  if (kernD && !kernD->isZero()) parts.push_back(SymMatrix::convolution(a.h_, a.g_, *kernD, StripeKey::Diff));
  SymMatrix ex = SymMatrix::explicitMatrix(a.h_, a.g_, a.kind_, entries);
  if (anyFinitary) {
    const SymMatrix converted = ex.asFinitary();
    for (const auto& t : converted.terms_) terms.push_back(t);
    SymMatrix fin = SymMatrix::finitary(a.h_, a.g_, a.kind_, std::move(terms));
    if (!fin.terms_.empty()) parts.push_back(std::move(fin));
  } else if (!ex.entries_.empty()) {
    parts.push_back(std::move(ex));
  }
  if (parts.empty()) return SymMatrix::explicitMatrix(a.h_, a.g_, a.kind_, {});
  if (parts.size() == 1) return parts.front();
  SymMatrix s;
  s.form_ = MatrixForm::Sum;
  s.h_ = a.h_;
  s.g_ = a.g_;
  s.kind_ = a.kind_;
  s.parts_ = std::move(parts);
  return s;
}

namespace {

// Points of u that determine every eventually periodic sequence with layout l.
Interval probeRange(const Universe& u, const FormalSum::Layout& l) {
  Interval r{l.lo - static_cast<Point>(l.lowPeriod.value_or(0)),
             l.hi + static_cast<Point>(l.upPeriod.value_or(0))};
  r.lo = std::max(r.lo, u.domain().lo);
  r.hi = std::min(r.hi, u.domain().hi);
  return r;
}

// Entries of a finitary matrix are periodic in h and in g outside the
// windows of its terms, so one period past each window decides zeroness.
bool finitaryIsZero(const SymMatrix& m) {
  if (m.terms().empty()) return true;
  FormalSum::Layout lh = m.terms().front().column.layout(), lg = m.terms().front().row.layout();
  for (const auto& t : m.terms()) {
    lh = joinLayouts(lh, t.column.layout());
    lg = joinLayouts(lg, t.row.layout());
  }
  const Interval rh = probeRange(m.rowUniverse(), lh), rg = probeRange(m.colUniverse(), lg);
  for (Point h = rh.lo; h <= rh.hi; ++h) {
    for (Point g = rg.lo; g <= rg.hi; ++g) {
      if (!m.at(h, g).isZero()) return false;
    }
  }
  return true;
}

}  // namespace

bool operator==(const SymMatrix& a, const SymMatrix& b) {
  if (!(a.h_ == b.h_) || !(a.g_ == b.g_) || a.kind_ != b.kind_) return false;
  const SymMatrix d = a - b;
  switch (d.form_) {
    case MatrixForm::Explicit: return d.entries_.empty();
    case MatrixForm::Finitary: return finitaryIsZero(d);
    case MatrixForm::Convolution: return d.kernel_.isZero();
    case MatrixForm::Sum: break;
  }
  try {
    return d.support().isEmpty();
  } catch (const UnrepresentableResult&) {
    return false;
  }
}

std::string SymMatrix::str() const {
  std::string out;
  switch (form_) {
    case MatrixForm::Explicit: {
      out = "explicit{";
      bool first = true;
      for (const auto& [p, v] : entries_) {
        if (!first) out += ", ";
        first = false;
        out += "(" + std::to_string(p.first) + "," + std::to_string(p.second) + "):" + v.str();
      }
      return out + "}";
    }
    case MatrixForm::Finitary:
      if (terms_.empty()) return "explicit{}";
      for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += "outer(" + terms_[i].column.str() + "; " + terms_[i].row.str() + ")";
      }
      return out;
    case MatrixForm::Convolution:
      return "conv(" + kernel_.str() + ", " + (key_ == StripeKey::Sum ? "s" : "d") + ")";
    case MatrixForm::Sum: break;
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " + ";
    out += parts_[i].str();
  }
  return out;
}

namespace {

struct Hull {
  Point lo, hi;
};

Hull hullOf(const FormalSum& f) {
  const SymSet s = f.support();
  return {s.intervals().front().lo, s.intervals().back().hi};
}

}  // namespace

FormalSum convolve(const FormalSum& l, const FormalSum& r) {
  const ScalarKind kind = l.kind();
  if (r.kind() != kind) throw TypeError("convolution mixes scalar kinds");
  if (l.isZero() || r.isZero()) return FormalSum::zero(kZ, kind);
  const FormalSum a = onIntegers(l), b = onIntegers(r);
  const Hull ha = hullOf(a), hb = hullOf(b);
  if ((ha.hi == kPosInf && hb.lo == kNegInf) || (ha.lo == kNegInf && hb.hi == kPosInf)) {
    throw UndefinedProduct("convolution of opposite tails is an infinite sum", "every index");
  }
  auto value = [&](Point n) {
    Point lo = ha.lo, hi = ha.hi;
    if (hb.hi != kPosInf) lo = std::max(lo, n - hb.hi);
    if (hb.lo != kNegInf) hi = std::min(hi, n - hb.lo);
    DivisionScalar total = DivisionScalar::zero(kind);
    for (Point w = lo; w <= hi; ++w) total += a.at(w) * b.at(n - w);
    return total;
  };
  const FormalSum::Layout la = a.layout(), lb = b.layout();
  std::size_t period = 1;
  for (auto p : {la.upPeriod, la.lowPeriod, lb.upPeriod, lb.lowPeriod}) {
    if (p) period = std::lcm(period, *p);
  }
  const Point reach = 2 * (a.maxAbsConstant() + b.maxAbsConstant()) + 2 * static_cast<Point>(period) + 2;
  const bool up = ha.hi == kPosInf || hb.hi == kPosInf;
  const bool low = ha.lo == kNegInf || hb.lo == kNegInf;
  FormalSum::Layout out;
  out.lo = low ? -reach : ha.lo + hb.lo;
  out.hi = up ? reach : ha.hi + hb.hi;
  if (up) out.upPeriod = period;
  if (low) out.lowPeriod = period;
  // A quasi-linear tail (two tails on the same side) shows up as drift.
  const Point p = static_cast<Point>(period);
  for (Point i = 1; i <= p; ++i) {
    if (up && !(value(reach + i) == value(reach + i + p))) {
      throw UnrepresentableResult("convolution is not eventually periodic");
    }
    if (low && !(value(-reach - i) == value(-reach - i - p))) {
      throw UnrepresentableResult("convolution is not eventually periodic");
    }
  }
  return FormalSum::tabulate(kZ, kind, out, value);
}

namespace {

void requireSide(const FormalSum& f, Side side, const char* what) {
  if (f.side() != side) {
    throw TypeError(std::string(what) + (side == Side::Column ? " needs a column" : " needs a row"));
  }
}

// Σ_u K(αu + βn)·x(u) as a sequence in n (kernel on the left).
FormalSum kernelLeft(const FormalSum& k, const FormalSum& x, Point alpha, Point beta,
                     const Universe& out, Side side) {
  FormalSum xz = onIntegers(x);
  if (alpha == 1) xz = xz.reflect();
  return affineView(convolve(k, xz), beta, 0, out, side);
}

// Σ_u x(u)·K(αu + βn) as a sequence in n (sequence on the left).
FormalSum kernelRight(const FormalSum& x, const FormalSum& k, Point alpha, Point beta,
                      const Universe& out, Side side) {
  FormalSum xz = onIntegers(x);
  if (alpha == 1) xz = xz.reflect();
  return affineView(convolve(xz, k), beta, 0, out, side);
}

std::string witnessWith(const char* label, Point p) { return std::string(label) + "=" + std::to_string(p); }

}  // namespace

FormalSum matVec(const SymMatrix& m, const FormalSum& a) {
  requireSide(a, Side::Column, "matVec");
  if (!(a.universe() == m.colUniverse())) throw UniverseMismatch("matVec: column over the wrong universe");
  if (a.kind() != m.kind()) throw TypeError("matVec mixes scalar kinds");
  const Universe& h = m.rowUniverse();
  const Universe& g = m.colUniverse();
  switch (m.form()) {
    case MatrixForm::Explicit: {
      std::map<Point, DivisionScalar> vals;
      for (const auto& [p, v] : m.entries()) {
        auto [it, fresh] = vals.emplace(p.first, v * a.at(g.star(p.second)));
        if (!fresh) it->second += v * a.at(g.star(p.second));
      }
      return FormalSum::fromMap(h, m.kind(), vals);
    }
    case MatrixForm::Finitary: {
      FormalSum total(h, m.kind());
      for (const auto& t : m.terms()) {
        try {
          total = total + scaleRight(t.column, pairing(t.row, a));
        } catch (const UndefinedPairing& e) {
          const Point w = t.column.support().intervals().front().lo;
          throw UndefinedProduct("row meets the column in infinitely many places",
                                 witnessWith("h", w == kNegInf ? t.column.support().intervals().front().hi : w));
        }
      }
      return total;
    }
    case MatrixForm::Convolution: {
      const Point sigma = twistSign(g);
      try {
        return kernelLeft(m.kernel(), a, sigma, m.key() == StripeKey::Sum ? 1 : -1, h, Side::Column);
      } catch (const UndefinedProduct&) {
        throw UndefinedProduct("every row meets the column in infinitely many places",
                               witnessWith("h", h.domain().lo == kNegInf ? 0 : h.domain().lo));
      }
    }
    case MatrixForm::Sum: break;
  }
  FormalSum total(h, m.kind());
  for (const auto& p : m.parts()) total = total + matVec(p, a);
  return total;
}

FormalSum vecMat(const FormalSum& row, const SymMatrix& m) {
  requireSide(row, Side::Row, "vecMat");
  if (!(row.universe() == m.rowUniverse())) throw UniverseMismatch("vecMat: row over the wrong universe");
  if (row.kind() != m.kind()) throw TypeError("vecMat mixes scalar kinds");
  const Universe& h = m.rowUniverse();
  const Universe& g = m.colUniverse();
  switch (m.form()) {
    case MatrixForm::Explicit: {
      std::map<Point, DivisionScalar> vals;
      for (const auto& [p, v] : m.entries()) {
        auto [it, fresh] = vals.emplace(p.second, row.at(h.star(p.first)) * v);
        if (!fresh) it->second += row.at(h.star(p.first)) * v;
      }
      return FormalSum::fromMap(g, m.kind(), vals).asRow();
    }
    case MatrixForm::Finitary: {
      FormalSum total(g, m.kind(), Side::Row);
      for (const auto& t : m.terms()) {
        try {
          total = total + scaleLeft(pairing(row, t.column), t.row);
        } catch (const UndefinedPairing& e) {
          const Point w = t.row.support().intervals().front().lo;
          throw UndefinedProduct("row meets a column in infinitely many places",
                                 witnessWith("g", w == kNegInf ? t.row.support().intervals().front().hi : w));
        }
      }
      return total;
    }
    case MatrixForm::Convolution: {
      const Point sigma = twistSign(h);
      const Point alpha = m.key() == StripeKey::Sum ? sigma : -sigma;
      try {
        return kernelRight(row, m.kernel(), alpha, 1, g, Side::Row);
      } catch (const UndefinedProduct&) {
        throw UndefinedProduct("the row meets every column in infinitely many places",
                               witnessWith("g", g.domain().lo == kNegInf ? 0 : g.domain().lo));
      }
    }
    case MatrixForm::Sum: break;
  }
  FormalSum total(g, m.kind(), Side::Row);
  for (const auto& p : m.parts()) total = total + vecMat(row, p);
  return total;
}

namespace {

SymMatrix scaleRight(const SymMatrix& m, const DivisionScalar& k) {
  if (k.kind() != m.kind()) throw TypeError("matrix mixes scalar kinds");
  switch (m.form()) {
    case MatrixForm::Explicit: {
      auto e = m.entries();
      for (auto& [p, v] : e) v = v * k;
      return SymMatrix::explicitMatrix(m.rowUniverse(), m.colUniverse(), m.kind(), e);
    }
    case MatrixForm::Finitary: {
      auto terms = m.terms();
      for (auto& t : terms) t.row = gzero::scaleRight(t.row, k);
      return SymMatrix::finitary(m.rowUniverse(), m.colUniverse(), m.kind(), std::move(terms));
    }
    case MatrixForm::Convolution:
      return SymMatrix::convolution(m.rowUniverse(), m.colUniverse(),
                                    gzero::scaleRight(m.kernel(), k), m.key());
    case MatrixForm::Sum: break;
  }
  SymMatrix total = scaleRight(m.parts().front(), k);
  for (std::size_t i = 1; i < m.parts().size(); ++i) total = total + scaleRight(m.parts()[i], k);
  return total;
}

bool isUnit(const SymMatrix& m) {
  if (!(m.rowUniverse() == m.colUniverse())) return false;
  const SymMatrix e = SymMatrix::identity(m.rowUniverse(), m.kind());
  return m.key() == e.key() && m.kernel() == e.kernel();
}

SymMatrix convTimesConv(const SymMatrix& phi, const SymMatrix& psi) {
  const Universe& mid = phi.colUniverse();
  if (mid.kind() != UniverseKind::IntLine) {
    throw UnrepresentableResult("product of convolutions needs the full integer line in the middle");
  }
  const Point sigma = twistSign(mid);
  const Point tau = phi.key() == StripeKey::Sum ? 1 : -1;
  const Point rho = psi.key() == StripeKey::Sum ? 1 : -1;
  const Universe& j = phi.rowUniverse();
  const Universe& g = psi.colUniverse();
  try {
    if (rho * sigma == -1) {
      return SymMatrix::convolution(j, g, convolve(phi.kernel(), psi.kernel()),
                                    tau == 1 ? StripeKey::Sum : StripeKey::Diff);
    }
    FormalSum c = convolve(phi.kernel(), psi.kernel().reflect()).reflect();
    return SymMatrix::convolution(j, g, c, tau == 1 ? StripeKey::Diff : StripeKey::Sum);
  } catch (const UndefinedProduct&) {
    throw UndefinedProduct("every entry of the product is an infinite sum", "j=0, g=0");
  }
}

}  // namespace

SymMatrix matMul(const SymMatrix& phi, const SymMatrix& psi) {
  if (!(phi.colUniverse() == psi.rowUniverse())) {
    throw UniverseMismatch("matMul: inner universes differ");
  }
  if (phi.kind() != psi.kind()) throw TypeError("matMul mixes scalar kinds");
  const Universe& j = phi.rowUniverse();
  const Universe& h = phi.colUniverse();
  const Universe& g = psi.colUniverse();
  auto sumOf = [&](const std::vector<SymMatrix>& ms) {
    SymMatrix total = SymMatrix::explicitMatrix(j, g, phi.kind(), {});
    for (const auto& m : ms) total = total + m;
    return total;
  };
  if (phi.form() == MatrixForm::Sum) {
    std::vector<SymMatrix> ms;
    for (const auto& p : phi.parts()) ms.push_back(matMul(p, psi));
    return sumOf(ms);
  }
  if (psi.form() == MatrixForm::Sum) {
    std::vector<SymMatrix> ms;
    for (const auto& p : psi.parts()) ms.push_back(matMul(phi, p));
    return sumOf(ms);
  }
  if (phi.form() == MatrixForm::Explicit && psi.form() == MatrixForm::Explicit) {
    std::map<std::pair<Point, Point>, DivisionScalar> out;
    for (const auto& [p, v] : phi.entries()) {
      const Point mid = h.star(p.second);
      for (auto it = psi.entries().lower_bound({mid, kNegInf});
           it != psi.entries().end() && it->first.first == mid; ++it) {
        auto [slot, fresh] = out.emplace(std::pair{p.first, it->first.second}, v * it->second);
        if (!fresh) slot->second += v * it->second;
      }
    }
    return SymMatrix::explicitMatrix(j, g, phi.kind(), out);
  }
  if (phi.form() != MatrixForm::Convolution) {
    std::vector<RankOne> terms;
    const SymMatrix fin = phi.asFinitary();
    for (const auto& t : fin.terms()) terms.push_back({t.column, vecMat(t.row, psi)});
    return SymMatrix::finitary(j, g, phi.kind(), std::move(terms));
  }
  if (psi.form() != MatrixForm::Convolution) {
    std::vector<RankOne> terms;
    const SymMatrix fin = psi.asFinitary();
    for (const auto& t : fin.terms()) terms.push_back({matVec(phi, t.column), t.row});
    return SymMatrix::finitary(j, g, phi.kind(), std::move(terms));
  }
  // Unit factors are exact on ℕ too, where Toeplitz products are truncated.
  if (isUnit(phi)) return psi;
  if (isUnit(psi)) return phi;
  return convTimesConv(phi, psi);
}

namespace {

void requireFactors(const SymMatrix& m, const Filter& fg, const Filter& fh) {
  if (!(fh.universe() == m.rowUniverse()) || !(fg.universe() == m.colUniverse())) {
    throw UniverseMismatch("filters do not live on the factors of the matrix");
  }
}

struct Sections {
  ProdSet support;
  Point r;
};

std::optional<Sections> sectionsOf(const SymMatrix& m, const Filter& fg, const Filter& fh,
                                   std::string& reason) {
  try {
    ProdSet s = m.support();
    const Point c = std::max(s.maxAbsConstant(), m.maxAbsConstant());
    return Sections{s, std::max(detail::stableParameter(fg, c), detail::stableParameter(fh, c))};
  } catch (const UnrepresentableResult& e) {
    reason = e.what();
    return std::nullopt;
  }
}

}  // namespace

Tri checkM1(const SymMatrix& m, const Filter& fg, const Filter& fh) {
  requireFactors(m, fg, fh);
  std::string reason;
  auto nfH = normalForm(fh, &reason);
  if (!nfH) return Tri::unknown("no base parametrization: " + reason);
  auto sec = sectionsOf(m, fg, fh, reason);
  if (!sec) return Tri::unknown(reason);
  const SymSet b = baseSet(detail::perpNF(*nfH), sec->r);
  const Universe u = m.productUniverse();
  const ProdSet rows = intersect(sec->support, ProdSet::rect(u, b.complement(), SymSet::full(m.colUniverse())));
  return member(star(perp(fg)), rows.projectG().complement());
}

Tri checkM2(const SymMatrix& m, const Filter& fg, const Filter& fh) {
  requireFactors(m, fg, fh);
  std::string reason;
  auto nfG = normalForm(fg, &reason);
  if (!nfG) return Tri::unknown("no base parametrization: " + reason);
  auto sec = sectionsOf(m, fg, fh, reason);
  if (!sec) return Tri::unknown(reason);
  const SymSet a = baseSet(*nfG, sec->r);
  const Universe u = m.productUniverse();
  const ProdSet cols = intersect(sec->support, ProdSet::rect(u, SymSet::full(m.rowUniverse()), a.complement().star()));
  return member(fh, cols.projectH().complement());
}

namespace {

void requireBalanced(const Filter& f) {
  Decision d = isBalanced(f);
  if (!d.tri.isYes()) throw NonBalanced(f.str() + " is not known to be balanced");
}

Tri zeroSetIn(const SymMatrix& m, const Filter& f) {
  try {
    return member(f, m.zeroSet());
  } catch (const UnrepresentableResult& e) {
    return Tri::unknown(e.what());
  }
}

}  // namespace

Tri isContinuousLeft(const SymMatrix& m, const Filter& fg, const Filter& fh) {
  requireFactors(m, fg, fh);
  requireBalanced(fg);
  requireBalanced(fh);
  return zeroSetIn(m, anglePair(fh, star(perp(fg))));
}

Tri isContinuousRight(const SymMatrix& m, const Filter& fg, const Filter& fh) {
  requireFactors(m, fg, fh);
  requireBalanced(fg);
  requireBalanced(fh);
  return zeroSetIn(m, anglePair(star(perp(fh)), fg));
}

namespace {

void requireContinuous(const SymMatrix& m, const Filter& f) {
  Tri t = isContinuousLeft(m, f, f);
  if (!t.isYes()) {
    throw PreconditionError("operand is not known to be continuous on FU(" + f.str() + "): " + t.str());
  }
}

}  // namespace

SymMatrix ringAdd(const SymMatrix& a, const SymMatrix& b, const Filter& f) {
  requireContinuous(a, f);
  requireContinuous(b, f);
  return a + b;
}

SymMatrix ringMul(const SymMatrix& a, const SymMatrix& b, const Filter& f) {
  requireContinuous(a, f);
  requireContinuous(b, f);
  return matMul(a, b);
}

SumResult gSumColumns(const SymMatrix& m, const SymSet& index, const FormalSum& k,
                      const Filter& fh) {
  FormalSum weights = k.restrict(index).asColumn();
  FormalSum value = matVec(m, weights);
  const Universe u = m.productUniverse();
  const ProdSet cols = intersect(m.support(), ProdSet::rect(u, SymSet::full(m.rowUniverse()),
                                                            weights.support().star()));
  const SymSet zeros = cols.projectH().complement();
  Tri t = member(fh, zeros);
  if (t.isNo()) throw NotSummable("images do not sum in " + fh.str(), zeros.str());
  return {std::move(value), t, zeros};
}

DualForm::DualForm(FormalSum row, Filter filter) : row_(row.asRow()), filter_(std::move(filter)) {
  const Filter dual = star(perp(filter_));
  Tri t = inSpace(row_, dual);
  if (t.isYes()) return;
  std::string witness;
  if (auto nf = normalForm(filter_)) {
    const Point r = detail::stableParameter(filter_, row_.maxAbsConstant());
    FormalSum probe = FormalSum::charFn(baseSet(*nf, r).complement(), row_.kind());
    if (!pairingDefined(row_, probe)) witness = " (diverges on " + probe.str() + ")";
  }
  throw PreconditionError("row is not known to lie in FU(" + dual.str() + ")" + witness);
}

DivisionScalar DualForm::operator()(const FormalSum& column) const {
  return pairing(row_, column);
}

Factor multiply(const Factor& a, const Factor& b) {
  using S = DivisionScalar;
  if (auto* x = std::get_if<S>(&a)) {
    if (auto* y = std::get_if<S>(&b)) return *x * *y;
    if (auto* y = std::get_if<FormalSum>(&b)) return scaleLeft(*x, *y);
    return scaleLeft(*x, std::get<SymMatrix>(b));
  }
  if (auto* y = std::get_if<S>(&b)) {
    if (auto* x = std::get_if<FormalSum>(&a)) return gzero::scaleRight(*x, *y);
    return scaleRight(std::get<SymMatrix>(a), *y);
  }
  if (auto* x = std::get_if<FormalSum>(&a)) {
    if (auto* y = std::get_if<FormalSum>(&b)) {
      if (x->side() == Side::Column && y->side() == Side::Row) {
        return SymMatrix::finitary(x->universe(), y->universe(), x->kind(), {{*x, *y}});
      }
      if (x->side() == Side::Row && y->side() == Side::Column) return pairing(*x, *y);
      throw PreconditionError("two adjacent factors on the same side");
    }
    if (x->side() != Side::Row) throw PreconditionError("a column cannot multiply a matrix");
    return vecMat(*x, std::get<SymMatrix>(b));
  }
  const auto& m = std::get<SymMatrix>(a);
  if (auto* y = std::get_if<FormalSum>(&b)) {
    if (y->side() != Side::Column) throw PreconditionError("a matrix cannot multiply a row");
    return matVec(m, *y);
  }
  return matMul(m, std::get<SymMatrix>(b));
}

namespace {

bool sameFactor(const Factor& a, const Factor& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b);
      },
      a);
}

}  // namespace

Factor alternatingProduct(const std::vector<Factor>& items) {
  if (items.empty()) throw PreconditionError("empty product");
  Factor left = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) left = multiply(left, items[i]);
  Factor right = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) right = multiply(items[i], right);
  if (!sameFactor(left, right)) throw Error("bracketings of the product disagree");
  return left;
}

std::string factorStr(const Factor& f) {
  return std::visit([](const auto& x) { return x.str(); }, f);
}

}  // namespace gzero
