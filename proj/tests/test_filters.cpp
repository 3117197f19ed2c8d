#include "doctest.h"
#include "gzero/error.hpp"
#include "gzero/sampling.hpp"
#include "gzero/oracle.hpp"

using namespace gzero;

namespace {

const Universe Z = Universe::intLine();
const Universe N = Universe::intHalfLine();
const Universe ZZ = Universe::product(Z, Z);

SymSet iv(Point a, Point b) { return SymSet::interval(Z, a, b); }

}  // namespace

TEST_CASE("atom membership") {
  auto dcc = Filter::dcc(Z);
  CHECK(member(dcc, iv(kNegInf, 0)).isYes());
  CHECK(member(dcc, iv(0, kPosInf)).isNo());
  CHECK(member(perp(dcc), iv(5, kPosInf)).isYes());
  CHECK(member(Filter::node(FilterKind::Perp, Z, {dcc}), iv(5, kPosInf)).isYes());
  CHECK(member(Filter::cof(Z), SymSet::points(Z, {0, 4}).complement()).isYes());
  CHECK(member(Filter::acc(N), SymSet::interval(N, 0, 9).complement()).isYes());
  CHECK(member(Filter::acc(N), SymSet::interval(N, 0, 9)).isNo());
}

TEST_CASE("identity rewrites") {
  CHECK(perp(Filter::cof(Z)) == Filter::all(Z));
  CHECK(perp(Filter::all(Z)) == Filter::cof(Z));
  CHECK(perp(Filter::dcc(Z)) == Filter::acc(Z));
  CHECK(perp(Filter::acc(Z)) == Filter::dcc(Z));
  CHECK(star(Filter::dcc(Z)) == Filter::acc(Z));
  CHECK(tensor(Filter::cof(Z), Filter::cof(Z)) == Filter::cof(ZZ));
  CHECK(anglePair(Filter::dcc(Z), Filter::acc(Z)) ==
        perp(tensor(Filter::acc(Z), Filter::dcc(Z))));
  auto p = Filter::principal(Z, {iv(0, 3)});
  CHECK(anglePair(p, Filter::dcc(Z)).kind() == FilterKind::Angle);
}

TEST_CASE("predicates with witnesses") {
  CHECK(isBalanced(Filter::dcc(Z)).tri.isYes());
  CHECK(isSelfAdjoint(Filter::dcc(Z)).tri.isYes());
  CHECK(isSelfAdjoint(Filter::dcc(Universe::intLine(Involution::Identity))).tri.isNo());
  auto fin = Universe::finite(5);
  Decision d = isProper(Filter::cof(fin));
  CHECK(d.tri.isNo());
  REQUIRE(d.witness.has_value());
  CHECK(std::get<SymSet>(*d.witness).isEmpty());
  CHECK(isProper(Filter::cof(Z)).tri.isYes());
  auto p = Filter::principal(Z, {iv(0, 3)});
  Decision b = isBalanced(p);
  CHECK(b.tri.isNo());
  REQUIRE(b.witness.has_value());
  auto w = std::get<SymSet>(*b.witness);
  CHECK(member(p, w).value != member(perp(perp(p)), w).value);
  Decision leq = filterLeq(Filter::cof(Z), Filter::dcc(Z));
  CHECK(leq.tri.isYes());
  Decision nleq = filterLeq(Filter::dcc(Z), Filter::cof(Z));
  CHECK(nleq.tri.isNo());
  auto nw = std::get<SymSet>(*nleq.witness);
  CHECK(member(Filter::dcc(Z), nw).isYes());
  CHECK(member(Filter::cof(Z), nw).isNo());
}

TEST_CASE("dcc and acc need an order") {
  CHECK_THROWS_AS(Filter::dcc(Universe::finite(3, false)), UnsupportedUniverse);
  CHECK_THROWS_AS(Filter::dcc(ZZ), UnsupportedUniverse);
  CHECK_THROWS_AS(star(Filter::cof(ZZ)), UnsupportedUniverse);
}

TEST_CASE("line engine agrees with the exhaustive compact model") {
  const std::vector<Universe> universes{Z, N, Universe::finite({"a", "b", "c", "d"}, {1, 0, 3, 2}),
                                        Universe::intLine(Involution::Identity)};
  for (const auto& u : universes) {
    oracle::CompactLine model(u, 4);
    Sampler sampler(parseSeed("5eed") + u.size(), 3);
    int compared = 0;
    for (int t = 0; t < 40; ++t) {
      Filter f = sampler.filter(u, 3);
      auto fam = model.family(f);
      REQUIRE(fam.has_value());
      for (int i = 0; i < 25; ++i) {
        SymSet x = sampler.set(u);
        Tri got = member(f, x);
        if (!got.decided()) continue;
        ++compared;
        INFO(f.str(), " on ", u.str(), " at ", x.str());
        CHECK(got.isYes() == model.contains(*fam, x));
      }
    }
    CHECK(compared > 900);
  }
}

TEST_CASE("product engine agrees with the window oracle") {
  const std::vector<FilterKind> atoms{FilterKind::All, FilterKind::Cof, FilterKind::Dcc,
                                      FilterKind::Acc};
  oracle::ProductWindow win(32);
  Sampler sampler(parseSeed("0ddba11"), 8);
  int compared = 0;
  for (auto a : atoms) {
    for (auto b : atoms) {
      Filter fh = Filter::node(a, Z), fg = Filter::node(b, Z);
      std::vector<Filter> shapes{
          Filter::node(FilterKind::Tensor, ZZ, {fh, fg}),
          Filter::node(FilterKind::TimesProd, ZZ, {fh, fg}),
          Filter::node(FilterKind::CofPair, ZZ, {fh, fg}),
          Filter::node(FilterKind::Angle, ZZ, {fh, fg}),
          anglePair(fh, fg),
          perp(perp(tensor(fh, fg))),
      };
      for (int i = 0; i < 6; ++i) {
        ProdSet x = sampler.prodSet(ZZ);
        for (const auto& f : shapes) {
          Tri got = member(f, x);
          auto want = win.member(f, x);
          if (!got.decided() || !want) continue;
          ++compared;
          INFO(f.str(), " at ", x.str());
          CHECK(got.isYes() == *want);
        }
      }
    }
  }
  CHECK(compared > 500);
}
