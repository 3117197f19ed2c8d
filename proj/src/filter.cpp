#include "gzero/filter.hpp"

#include <algorithm>

#include "gzero/error.hpp"
#include "filter_engine.hpp"

namespace gzero {

std::string Tri::str() const {
  switch (value) {
    case TriValue::Yes: return "yes";
    case TriValue::No: return "no";
    case TriValue::Unknown: return "unknown";
  }
  return "unknown";
}

Tri operator&&(const Tri& a, const Tri& b) {
  if (a.isNo() || b.isNo()) return Tri::no();
  if (a.isUnknown()) return a;
  if (b.isUnknown()) return b;
  return Tri::yes();
}

Tri operator!(const Tri& a) {
  if (a.isUnknown()) return a;
  return Tri::of(a.isNo());
}

std::string setStr(const SetValue& s) {
  return std::visit([](const auto& x) { return x.str(); }, s);
}

const Universe& setUniverse(const SetValue& s) {
  return std::visit([](const auto& x) -> const Universe& { return x.universe(); }, s);
}

namespace {

bool isProductKind(FilterKind k) {
  return k == FilterKind::Tensor || k == FilterKind::CofPair || k == FilterKind::Angle ||
         k == FilterKind::TimesProd;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Filter Filter::node(FilterKind kind, const Universe& u, std::vector<Filter> kids,
                    std::vector<SetValue> sets) {
  switch (kind) {
    case FilterKind::All:
    case FilterKind::Cof: require(kids.empty() && sets.empty(), "atom takes no arguments"); break;
    case FilterKind::Dcc:
    case FilterKind::Acc:
      if (u.isProduct() || !u.hasOrder()) {
        throw UnsupportedUniverse("dcc/acc need an ordered universe, got " + u.str());
      }
      break;
    case FilterKind::Principal:
      require(!sets.empty(), "principal filter needs at least one base set");
      for (const auto& s : sets) requireSameUniverse(setUniverse(s), u, "principal");
      break;
    case FilterKind::Meet:
    case FilterKind::Join:
    case FilterKind::Quotient:
      require(kids.size() == 2, "binary filter operation needs two operands");
      requireSameUniverse(kids[0].universe(), u, "filter operation");
      requireSameUniverse(kids[1].universe(), u, "filter operation");
      break;
    case FilterKind::Perp:
      require(kids.size() == 1, "perp takes one filter");
      requireSameUniverse(kids[0].universe(), u, "perp");
      break;
    case FilterKind::Star:
      require(kids.size() == 1, "star takes one filter");
      if (u.isProduct()) throw UnsupportedUniverse("no involution is defined on a product universe");
      requireSameUniverse(kids[0].universe(), u, "star");
      break;
    case FilterKind::Induced:
      require(kids.size() == 1 && sets.size() == 1, "induced takes a filter and a set");
      require(std::holds_alternative<SymSet>(sets[0]), "induced needs a one-dimensional set");
      requireSameUniverse(kids[0].universe(), u, "induced");
      requireSameUniverse(setUniverse(sets[0]), u, "induced");
      break;
    default:
      require(isProductKind(kind) && kids.size() == 2, "product filter takes two filters");
      if (!u.isProduct()) throw UniverseMismatch("product filter over " + u.str());
      requireSameUniverse(kids[0].universe(), u.left(), "product filter (H factor)");
      requireSameUniverse(kids[1].universe(), u.right(), "product filter (G factor)");
      break;
  }
  Filter f;
  f.n_ = std::make_shared<const Node>(Node{kind, u, std::move(kids), std::move(sets)});
  return f;
}

bool operator==(const Filter& a, const Filter& b) {
  if (a.n_ == b.n_) return true;
  return a.kind() == b.kind() && a.universe() == b.universe() && a.kids() == b.kids() &&
         a.sets() == b.sets();
}

std::string Filter::str() const {
  auto bin = [&](const char* name) {
    return std::string(name) + "(" + kid(0).str() + ", " + kid(1).str() + ")";
  };
  switch (kind()) {
    case FilterKind::All: return "all";
    case FilterKind::Cof: return "cof";
    case FilterKind::Dcc: return "dcc";
    case FilterKind::Acc: return "acc";
    case FilterKind::Principal: {
      std::string s = "principal{";
      for (std::size_t i = 0; i < sets().size(); ++i) s += (i ? ", " : "") + setStr(sets()[i]);
      return s + "}";
    }
    case FilterKind::Meet: return bin("meet");
    case FilterKind::Join: return bin("join");
    case FilterKind::Quotient: return bin("quot");
    case FilterKind::Perp: return "perp(" + kid(0).str() + ")";
    case FilterKind::Star: return "istar(" + kid(0).str() + ")";
    case FilterKind::Induced: return "induced(" + kid(0).str() + ", " + setStr(sets()[0]) + ")";
    case FilterKind::Tensor: return bin("tensor");
    case FilterKind::CofPair: return bin("cofpair");
    case FilterKind::Angle: return bin("angle");
    case FilterKind::TimesProd: return bin("times");
  }
  return "?";
}

// Builders with the identity rewrites.

Filter meet(const Filter& a, const Filter& b) {
  if (a == b || b.kind() == FilterKind::All) return a;
  if (a.kind() == FilterKind::All) return b;
  return Filter::node(FilterKind::Meet, a.universe(), {a, b});
}

Filter join(const Filter& a, const Filter& b) {
  if (a == b) return a;
  if (a.kind() == FilterKind::All) return a;
  if (b.kind() == FilterKind::All) return b;
  return Filter::node(FilterKind::Join, a.universe(), {a, b});
}

Filter quotient(const Filter& a, const Filter& b) {
  return Filter::node(FilterKind::Quotient, a.universe(), {a, b});
}

Filter perp(const Filter& f) {
  const Universe& u = f.universe();
  switch (f.kind()) {
    case FilterKind::Cof: return Filter::all(u);
    case FilterKind::All: return Filter::cof(u);
    case FilterKind::Dcc: return Filter::acc(u);
    case FilterKind::Acc: return Filter::dcc(u);
    case FilterKind::Perp:
      if (f.kid(0).kind() == FilterKind::Perp) return f.kid(0);
      break;
    default: break;
  }
  return Filter::node(FilterKind::Perp, u, {f});
}

Filter star(const Filter& f) {
  const Universe& u = f.universe();
  if (u.isProduct()) throw UnsupportedUniverse("no involution is defined on a product universe");
  if (u.involution() == Involution::Identity) return f;
  switch (f.kind()) {
    case FilterKind::All:
    case FilterKind::Cof: return f;
    case FilterKind::Dcc:
      if (u.starReversesOrder()) return Filter::acc(u);
      break;
    case FilterKind::Acc:
      if (u.starReversesOrder()) return Filter::dcc(u);
      break;
    case FilterKind::Star: return f.kid(0);
    case FilterKind::Meet: return meet(star(f.kid(0)), star(f.kid(1)));
    case FilterKind::Join: return join(star(f.kid(0)), star(f.kid(1)));
    case FilterKind::Perp: return perp(star(f.kid(0)));
    case FilterKind::Principal: {
      std::vector<SetValue> bases;
      for (const auto& s : f.sets()) bases.emplace_back(std::get<SymSet>(s).star());
      return Filter::principal(u, std::move(bases));
    }
    default: break;
  }
  return Filter::node(FilterKind::Star, u, {f});
}

Filter induced(const Filter& f, const SymSet& c) {
  return Filter::node(FilterKind::Induced, f.universe(), {f}, {c});
}

Filter tensor(const Filter& fh, const Filter& fg) {
  Universe u = Universe::product(fh.universe(), fg.universe());
  if (fh.kind() == FilterKind::Cof && fg.kind() == FilterKind::Cof) return Filter::cof(u);
  return Filter::node(FilterKind::Tensor, u, {fh, fg});
}

Filter cofPair(const Filter& fh, const Filter& fg) {
  return Filter::node(FilterKind::CofPair, Universe::product(fh.universe(), fg.universe()),
                      {fh, fg});
}

Filter anglePair(const Filter& fh, const Filter& fg) {
  if (isBalanced(fh).tri.isYes() && isBalanced(fg).tri.isYes()) {
    return perp(tensor(perp(fh), perp(fg)));
  }
  return Filter::node(FilterKind::Angle, Universe::product(fh.universe(), fg.universe()),
                      {fh, fg});
}

Filter timesProd(const Filter& fh, const Filter& fg) {
  return Filter::node(FilterKind::TimesProd, Universe::product(fh.universe(), fg.universe()),
                      {fh, fg});
}

Filter normalize(const Filter& f) {
  std::vector<Filter> k;
  for (const auto& c : f.kids()) k.push_back(normalize(c));
  switch (f.kind()) {
    case FilterKind::Meet: return meet(k[0], k[1]);
    case FilterKind::Join: return join(k[0], k[1]);
    case FilterKind::Quotient: return quotient(k[0], k[1]);
    case FilterKind::Perp: return perp(k[0]);
    case FilterKind::Star: return star(k[0]);
    case FilterKind::Induced: return induced(k[0], std::get<SymSet>(f.sets()[0]));
    case FilterKind::Tensor: return tensor(k[0], k[1]);
    case FilterKind::CofPair: return cofPair(k[0], k[1]);
    case FilterKind::Angle: return anglePair(k[0], k[1]);
    case FilterKind::TimesProd: return timesProd(k[0], k[1]);
    default: return f;
  }
}

// One-dimensional normal forms.

namespace {

bool eLow(const NormalForm& nf) { return nf.lo || nf.z.hasLowerRay(); }
bool eHigh(const NormalForm& nf) { return nf.hi || nf.z.hasUpperRay(); }

NormalForm tidy(NormalForm nf) {
  const Interval dom = nf.z.universe().domain();
  if (dom.lo != kNegInf || nf.z.hasLowerRay()) nf.lo = false;
  if (dom.hi != kPosInf || nf.z.hasUpperRay()) nf.hi = false;
  return nf;
}

}  // namespace

std::optional<NormalForm> normalForm(const Filter& f, std::string* reason) {
  const Universe& u = f.universe();
  auto fail = [&](const std::string& why) -> std::optional<NormalForm> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  if (u.isProduct()) return fail("product filters have no one-dimensional normal form");
  const SymSet none = SymSet::empty(u);
  switch (f.kind()) {
    case FilterKind::All: return tidy({none, false, false});
    case FilterKind::Cof: return tidy({none, true, true});
    case FilterKind::Dcc: return tidy({none, true, false});
    case FilterKind::Acc: return tidy({none, false, true});
    case FilterKind::Principal: {
      SymSet z = SymSet::full(u);
      for (const auto& s : f.sets()) z = intersect(z, std::get<SymSet>(s));
      return tidy({z, false, false});
    }
    case FilterKind::Induced:
      return fail("induced filters live on their subset; combinators over them are not reduced");
    default: break;
  }
  std::vector<NormalForm> k;
  for (const auto& c : f.kids()) {
    auto n = normalForm(c, reason);
    if (!n) return std::nullopt;
    k.push_back(*n);
  }
  switch (f.kind()) {
    case FilterKind::Meet:
      return tidy({unite(k[0].z, k[1].z), k[0].lo || k[1].lo, k[0].hi || k[1].hi});
    case FilterKind::Join:
      return tidy({intersect(k[0].z, k[1].z), eLow(k[0]) && eLow(k[1]),
                   eHigh(k[0]) && eHigh(k[1])});
    case FilterKind::Quotient:
      return tidy({minus(k[0].z, k[1].z), k[0].lo && !eLow(k[1]), k[0].hi && !eHigh(k[1])});
    case FilterKind::Perp: return tidy({none, !eLow(k[0]), !eHigh(k[0])});
    case FilterKind::Star: {
      NormalForm s{k[0].z.star(), k[0].lo, k[0].hi};
      if (u.starReversesOrder()) std::swap(s.lo, s.hi);
      return tidy(s);
    }
    default: break;
  }
  return fail("no normal form for " + f.str());
}

SymSet baseSet(const NormalForm& nf, Point r) {
  const Universe& u = nf.z.universe();
  std::vector<Interval> extra;
  if (nf.lo) extra.push_back({kNegInf, -r - 1});
  if (nf.hi) extra.push_back({r + 1, kPosInf});
  return unite(nf.z, SymSet::fromIntervals(u, extra));
}

Tri memberNF(const NormalForm& nf, const SymSet& x) {
  if (!nf.z.subsetOf(x)) return Tri::no();
  const SymSet xc = x.complement();
  if (nf.lo && !xc.boundedBelow()) return Tri::no();
  if (nf.hi && !xc.boundedAbove()) return Tri::no();
  return Tri::yes();
}

Tri member(const Filter& f, const SetValue& x) {
  requireSameUniverse(setUniverse(x), f.universe(), "member");
  if (const auto* p = std::get_if<ProdSet>(&x)) return detail::memberProduct(f, *p);
  return detail::memberLine(f, std::get<SymSet>(x));
}

}  // namespace gzero

namespace gzero::detail {

NormalForm perpNF(const NormalForm& nf) {
  return tidy({SymSet::empty(nf.z.universe()), !eLow(nf), !eHigh(nf)});
}

bool balancedNF(const NormalForm& nf) { return perpNF(perpNF(nf)) == nf; }

}  // namespace gzero::detail
