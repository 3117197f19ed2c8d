#include "doctest.h"
#include "gzero/error.hpp"
#include "gzero/formal_sum.hpp"
#include "gzero/sampling.hpp"

using namespace gzero;

namespace {

const Universe Z = Universe::intLine();
const Universe N = Universe::intHalfLine();

FormalSum randomSum(Sampler& s, const Universe& u, ScalarKind kind = ScalarKind::Rational) {
  auto scalar = [&] {
    DivisionScalar r(s.point(1, 3) * (s.coin() ? 1 : -1), s.point(1, 2));
    if (kind == ScalarKind::Rational) return r;
    return DivisionScalar(Quaternion(r.rational(), s.point(-1, 1), 0, s.point(-1, 1)));
  };
  FormalSum f = FormalSum::zero(u, kind);
  for (int i = static_cast<int>(s.point(0, 3)); i > 0; --i) {
    f = f + FormalSum::delta(u, s.point(u.domain().lo == 0 ? 0 : -8, 8), scalar());
  }
  if (s.coin()) {
    std::vector<DivisionScalar> c;
    for (int i = static_cast<int>(s.point(1, 3)); i > 0; --i) c.push_back(scalar());
    f = f + FormalSum::pattern(u, {s.point(0, 6), kPosInf}, c);
  }
  if (u.domain().lo == kNegInf && s.coin()) {
    f = f + FormalSum::pattern(u, {kNegInf, s.point(-6, 0)}, {scalar()});
  }
  return f;
}

}  // namespace

TEST_CASE("construction and canonical form") {
  auto geo = FormalSum::charFn(SymSet::interval(Z, 0, kPosInf));
  CHECK(geo.str() == "pat([0..inf), period=1, [1])");
  auto f = geo - FormalSum::delta(Z, 5);
  CHECK(f.support() == SymSet::fromIntervals(Z, {{0, 4}, {6, kPosInf}}));
  CHECK((FormalSum::delta(Z, 0) + (-FormalSum::delta(Z, 0))).zeroSet().isFull());
  CHECK(FormalSum::charFn(SymSet::empty(Z)).isZero());
  auto alt = FormalSum::pattern(Z, {0, kPosInf}, {1, -1, 1, -1});
  CHECK(alt.upperTail()->period() == 2);
  CHECK(FormalSum::charFn(SymSet::full(Z)) ==
        FormalSum::pattern(Z, {3, kPosInf}, {1}) + FormalSum::pattern(Z, {kNegInf, 2}, {1}));
  CHECK_THROWS_AS(FormalSum::pattern(Z, {0, kPosInf}, {1, 0}), UnrepresentableResult);
  CHECK_THROWS_AS(FormalSum::pattern(Z, {0, kPosInf}, {1, 1}) +
                      FormalSum::pattern(Z, {0, kPosInf}, {-1, 1}),
                  UnrepresentableResult);
}

TEST_CASE("arithmetic agrees pointwise") {
  Sampler s(parseSeed("a11ce"));
  for (int t = 0; t < 300; ++t) {
    const Universe& u = t % 3 == 0 ? N : Z;
    const ScalarKind kind = t % 4 == 0 ? ScalarKind::Quaternion : ScalarKind::Rational;
    FormalSum f = randomSum(s, u, kind), h = randomSum(s, u, kind);
    FormalSum sum;
    try {
      sum = f + h;
    } catch (const UnrepresentableResult&) {
      continue;
    }
    DivisionScalar k = kind == ScalarKind::Rational ? DivisionScalar(2, 3)
                                                    : DivisionScalar(Quaternion(0, 1, 1, 0));
    FormalSum kl = scaleLeft(k, f), kr = scaleRight(f, k);
    SymSet a = s.set(u);
    auto [in, out] = splitBy(f, a);
    for (Point n = -40; n <= 40; ++n) {
      if (!u.contains(n)) continue;
      CHECK(sum.at(n) == f.at(n) + h.at(n));
      CHECK(kl.at(n) == k * f.at(n));
      CHECK(kr.at(n) == f.at(n) * k);
      CHECK(f.support().contains(n) == !f.at(n).isZero());
      CHECK(in.at(n) == (a.contains(n) ? f.at(n) : DivisionScalar::zero(kind)));
    }
    CHECK(in + out == f);
    CHECK(kl.zeroSet() == f.zeroSet());
    CHECK(intersect(f.zeroSet(), h.zeroSet()).subsetOf(sum.zeroSet()));
    if (u == Z) CHECK(f.reflect().reflect() == f);
  }
}

TEST_CASE("pairing") {
  auto f = FormalSum::delta(Z, 0) + FormalSum::delta(Z, 1);
  auto h = FormalSum::delta(Z, 0) - FormalSum::delta(Z, -1);
  CHECK(pairing(f, h) == DivisionScalar(0));
  auto geo = FormalSum::charFn(SymSet::interval(Z, 0, kPosInf));
  CHECK(pairing(geo, geo) == DivisionScalar(1));
  CHECK(pairing(geo, FormalSum::delta(Z, -4)) == DivisionScalar(1));
  auto geoId = FormalSum::charFn(SymSet::interval(Universe::intLine(Involution::Identity), 0, kPosInf));
  CHECK_THROWS_AS(pairing(geoId, geoId), UndefinedPairing);
  auto i = DivisionScalar(Quaternion(0, 1, 0, 0)), j = DivisionScalar(Quaternion(0, 0, 1, 0));
  CHECK(pairing(FormalSum::delta(Z, 2, i), FormalSum::delta(Z, -2, j)) == i * j);
}

TEST_CASE("spaces, sums and neighborhoods") {
  auto dcc = Filter::dcc(Z), cof = Filter::cof(Z);
  auto geo = FormalSum::charFn(SymSet::interval(Z, 0, kPosInf));
  CHECK(inSpace(geo, dcc).isYes());
  CHECK(inSpace(geo, cof).isNo());
  CHECK(inSpace(FormalSum::delta(Z, 3), cof).isYes());
  auto ones = FormalSum::charFn(SymSet::full(Z));
  auto r = gSumDelta(SymSet::interval(Z, 0, kPosInf), ones, dcc);
  CHECK(r.value == geo);
  CHECK(r.summable.isYes());
  CHECK_THROWS_AS(gSumDelta(SymSet::interval(Z, 0, kPosInf), ones, cof), NotSummable);
  CHECK(gSum({}, cof).value.isZero());
  auto box = FormalSum::charFn(SymSet::interval(Z, 3, 7));
  CHECK(inNeighborhood(box, SymSet::interval(Z, 0, kPosInf), dcc).isYes());
  CHECK(inNeighborhood(box, SymSet::interval(Z, 5, kPosInf), dcc).isNo());
  CHECK_THROWS_AS(inNeighborhood(box, SymSet::interval(Z, kNegInf, 0), dcc), InvalidNeighborhood);
  CHECK(truncate(geo, SymSet::interval(Z, 0, 4)) == FormalSum::charFn(SymSet::interval(Z, 0, 4)));
  CHECK(truncate(geo, SymSet::empty(Z)).isZero());
  CHECK_THROWS_AS(truncate(geo, SymSet::interval(Z, 0, kPosInf)), PreconditionError);
}
