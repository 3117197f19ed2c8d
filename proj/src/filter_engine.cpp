// Membership for filters on one-dimensional universes without a closed form,
// and the parametric-base engine for filters on H×G.
#include "filter_engine.hpp"

#include <algorithm>

#include "gzero/error.hpp"
#include "gzero/sampling.hpp"

namespace gzero::detail {

namespace {

Point filterConstant(const Filter& f) {
  Point m = 0;
  for (const auto& s : f.sets()) {
    m = std::max(m, std::visit([](const auto& x) { return x.maxAbsConstant(); }, s));
  }
  for (const auto& k : f.kids()) m = std::max(m, filterConstant(k));
  return m;
}

// Decreasing family B(R) of smallest members of a filter on H×G.
struct Base {
  enum class Kind { All, Cof, Fixed, Tensor, Times, CofPair, Meet, Join } kind;
  ProdSet fixed;
  std::optional<NormalForm> h, g;
  std::vector<Base> kids;
};

SymSet window(const Universe& u, Point r) { return SymSet::interval(u, -r, r); }

ProdSet baseAt(const Base& b, const Universe& u, Point r) {
  const Universe& uh = u.left();
  const Universe& ug = u.right();
  switch (b.kind) {
    case Base::Kind::All: return ProdSet::empty(u);
    case Base::Kind::Cof: return ProdSet::rect(u, window(uh, r), window(ug, r)).complement();
    case Base::Kind::Fixed: return b.fixed;
    case Base::Kind::Tensor:
      return ProdSet::rect(u, baseSet(*b.h, r).complement(), baseSet(*b.g, r).complement())
          .complement();
    case Base::Kind::Times: return ProdSet::rect(u, baseSet(*b.h, r), baseSet(*b.g, r));
    case Base::Kind::CofPair: {
      ProdSet rows = ProdSet::rect(u, window(uh, r), baseSet(*b.g, r).complement());
      ProdSet cols = ProdSet::rect(u, baseSet(*b.h, r).complement(), window(ug, r));
      return unite(rows, cols).complement();
    }
    case Base::Kind::Meet: return unite(baseAt(b.kids[0], u, r), baseAt(b.kids[1], u, r));
    case Base::Kind::Join: return intersect(baseAt(b.kids[0], u, r), baseAt(b.kids[1], u, r));
  }
  return ProdSet::empty(u);
}

struct Form {
  enum class Kind { Base, Perp, PerpPerp, Angle, Quotient, Meet } kind;
  std::vector<Base> bases;
  std::optional<NormalForm> h, g;
  std::vector<Form> kids;
};

std::optional<Form> formOf(const Filter& f, std::string& why) {
  const Universe& u = f.universe();
  auto factorForms = [&](std::optional<NormalForm>& h, std::optional<NormalForm>& g) {
    h = normalForm(f.kid(0), &why);
    if (h) g = normalForm(f.kid(1), &why);
    return h && g;
  };
  auto baseForm = [](Base b) { return Form{Form::Kind::Base, {std::move(b)}, {}, {}, {}}; };
  switch (f.kind()) {
    case FilterKind::All: return baseForm({Base::Kind::All, {}, {}, {}, {}});
    case FilterKind::Cof: return baseForm({Base::Kind::Cof, {}, {}, {}, {}});
    case FilterKind::Principal: {
      ProdSet z = ProdSet::full(u);
      for (const auto& s : f.sets()) z = intersect(z, std::get<ProdSet>(s));
      return baseForm({Base::Kind::Fixed, z, {}, {}, {}});
    }
    case FilterKind::Tensor:
    case FilterKind::TimesProd:
    case FilterKind::CofPair: {
      Base b{Base::Kind::Tensor, {}, {}, {}, {}};
      if (!factorForms(b.h, b.g)) return std::nullopt;
      if (f.kind() == FilterKind::TimesProd) b.kind = Base::Kind::Times;
      if (f.kind() == FilterKind::CofPair) b.kind = Base::Kind::CofPair;
      return baseForm(std::move(b));
    }
    case FilterKind::Angle: {
      Form a{Form::Kind::Angle, {}, {}, {}, {}};
      if (!factorForms(a.h, a.g)) return std::nullopt;
      return a;
    }
    default: break;
  }
  std::vector<Form> k;
  for (const auto& c : f.kids()) {
    auto x = formOf(c, why);
    if (!x) return std::nullopt;
    k.push_back(std::move(*x));
  }
  const bool allBase = std::all_of(k.begin(), k.end(),
                                   [](const Form& x) { return x.kind == Form::Kind::Base; });
  switch (f.kind()) {
    case FilterKind::Meet:
      if (allBase) return baseForm({Base::Kind::Meet, {}, {}, {}, {k[0].bases[0], k[1].bases[0]}});
      return Form{Form::Kind::Meet, {}, {}, {}, std::move(k)};
    case FilterKind::Join:
      if (allBase) return baseForm({Base::Kind::Join, {}, {}, {}, {k[0].bases[0], k[1].bases[0]}});
      why = "join of non-base product filters is outside the decided fragment";
      return std::nullopt;
    case FilterKind::Quotient:
      if (allBase) return Form{Form::Kind::Quotient, {k[0].bases[0], k[1].bases[0]}, {}, {}, {}};
      why = "quotient of non-base product filters is outside the decided fragment";
      return std::nullopt;
    case FilterKind::Perp: {
      Form& x = k[0];
      switch (x.kind) {
        case Form::Kind::Base: x.kind = Form::Kind::Perp; return x;
        case Form::Kind::Perp: x.kind = Form::Kind::PerpPerp; return x;
        case Form::Kind::PerpPerp: x.kind = Form::Kind::Perp; return x;
        case Form::Kind::Angle:
          if (balancedNF(*x.h) && balancedNF(*x.g)) {
            Base t{Base::Kind::Tensor, {}, perpNF(*x.h), perpNF(*x.g), {}};
            return Form{Form::Kind::PerpPerp, {t}, {}, {}, {}};
          }
          why = "perp of an angle filter with non-balanced arguments";
          return std::nullopt;
        default:
          why = "perp of this product filter is outside the decided fragment";
          return std::nullopt;
      }
    }
    default: break;
  }
  why = "no decision rule for " + f.str();
  return std::nullopt;
}

Tri decide(const Form& form, const ProdSet& x, const ProdSet& xc, Point r) {
  const Universe& u = x.universe();
  switch (form.kind) {
    case Form::Kind::Base: return Tri::of(intersect(xc, baseAt(form.bases[0], u, r)).isEmpty());
    case Form::Kind::Perp:
      return Tri::of(minus(xc, baseAt(form.bases[0], u, r)).isFinite());
    case Form::Kind::PerpPerp:
      return Tri::of(intersect(xc, baseAt(form.bases[0], u, r)).isFinite());
    case Form::Kind::Quotient: {
      ProdSet rest = minus(xc, baseAt(form.bases[1], u, r));
      return Tri::of(intersect(rest, baseAt(form.bases[0], u, 8 * r + 64)).isEmpty());
    }
    case Form::Kind::Angle: {
      // a': every column block over the complement of a base of perp F_G
      SymSet aBar = baseSet(perpNF(*form.g), r).complement();
      SymSet rowsOk =
          intersect(xc, ProdSet::rect(u, SymSet::full(u.left()), aBar)).projectH().complement();
      if (memberNF(*form.h, rowsOk).isNo()) return Tri::no();
      // b': symmetric condition with the roles of H and G exchanged
      SymSet bBar = baseSet(perpNF(*form.h), r).complement();
      SymSet colsOk =
          intersect(xc, ProdSet::rect(u, bBar, SymSet::full(u.right()))).projectG().complement();
      return memberNF(*form.g, colsOk);
    }
    case Form::Kind::Meet: {
      Tri t = Tri::yes();
      for (const auto& k : form.kids) t = t && decide(k, x, xc, r);
      return t;
    }
  }
  return Tri::unknown("unreachable");
}

}  // namespace

Point stableParameter(const Filter& f, Point setConstant) {
  return 16 * std::max(filterConstant(f), setConstant) + 64;
}

Tri memberLine(const Filter& f, const SymSet& x) {
  std::string why;
  if (auto nf = normalForm(f, &why)) return memberNF(*nf, x);
  switch (f.kind()) {
    case FilterKind::Induced: {
      const SymSet& c = std::get<SymSet>(f.sets()[0]);
      if (!x.subsetOf(c)) return Tri::no();
      return memberLine(f.kid(0), unite(x, c.complement()));
    }
    case FilterKind::Meet: return memberLine(f.kid(0), x) && memberLine(f.kid(1), x);
    case FilterKind::Star: return memberLine(f.kid(0), x.star());
    default: return Tri::unknown(why);
  }
}

Tri memberProduct(const Filter& f, const ProdSet& x) {
  std::string why;
  auto form = formOf(f, why);
  if (!form) return Tri::unknown(why);
  return decide(*form, x, x.complement(), stableParameter(f, x.maxAbsConstant()));
}

}  // namespace gzero::detail

namespace gzero {

namespace {

constexpr int kRefutationSamples = 48;

/// Looks for a set that `a` accepts and `b` rejects.
std::optional<SetValue> separate(const Filter& a, const Filter& b) {
  const Universe& u = a.universe();
  Sampler sampler(parseSeed(kDefaultSeed));
  for (int i = 0; i < kRefutationSamples; ++i) {
    SetValue x = u.isProduct() ? SetValue(sampler.prodSet(u)) : SetValue(sampler.set(u));
    if (member(a, x).isYes() && member(b, x).isNo()) return x;
  }
  return std::nullopt;
}

Decision refuteOrUnknown(const Filter& a, const Filter& b, const std::string& what) {
  if (auto w = separate(a, b)) return {Tri::no(), w};
  if (auto w = separate(b, a)) return {Tri::no(), w};
  return {Tri::unknown(what + ": no counterexample among sampled sets"), std::nullopt};
}

}  // namespace

Decision isProper(const Filter& f) {
  const Universe& u = f.universe();
  SetValue empty = u.isProduct() ? SetValue(ProdSet::empty(u)) : SetValue(SymSet::empty(u));
  Tri t = member(f, empty);
  if (t.isYes()) return {Tri::no(), empty};
  if (t.isNo()) return {Tri::yes(), std::nullopt};
  return {t, std::nullopt};
}

Decision filterLeq(const Filter& a, const Filter& b) {
  requireSameUniverse(a.universe(), b.universe(), "filterLeq");
  auto na = normalForm(a), nb = normalForm(b);
  if (na && nb) {
    const bool lowOk = !nb->lo || na->lo || na->z.hasLowerRay();
    const bool highOk = !nb->hi || na->hi || na->z.hasUpperRay();
    if (nb->z.subsetOf(na->z) && lowOk && highOk) return {Tri::yes(), std::nullopt};
    Point r = std::max(detail::stableParameter(a, 0), detail::stableParameter(b, 0));
    return {Tri::no(), SetValue(baseSet(*na, r))};
  }
  if (normalize(a) == normalize(b)) return {Tri::yes(), std::nullopt};
  if (auto w = separate(a, b)) return {Tri::no(), w};
  return {Tri::unknown("inclusion of " + a.str() + " in " + b.str() +
                       ": no counterexample among sampled sets"),
          std::nullopt};
}

Decision equivalent(const Filter& a, const Filter& b) {
  Decision ab = filterLeq(a, b);
  if (ab.tri.isNo()) return ab;
  Decision ba = filterLeq(b, a);
  if (ba.tri.isNo()) return ba;
  if (ab.tri.isYes() && ba.tri.isYes()) return {Tri::yes(), std::nullopt};
  return refuteOrUnknown(a, b, "equality of " + a.str() + " and " + b.str());
}

Decision isBalanced(const Filter& f) { return equivalent(f, perp(perp(f))); }

Decision isSelfAdjoint(const Filter& f) { return equivalent(f, star(perp(f))); }

}  // namespace gzero
