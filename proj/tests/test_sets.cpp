#include <random>

#include "doctest.h"
#include "gzero/error.hpp"
#include "gzero/prodset.hpp"

using namespace gzero;

namespace {

const Universe Z = Universe::intLine();
const Universe N = Universe::intHalfLine();

SymSet randomSet(std::mt19937& rng, const Universe& u) {
  std::uniform_int_distribution<int> n(0, 3), v(-12, 12), ray(0, 3);
  std::vector<Interval> ivs;
  for (int i = n(rng); i > 0; --i) {
    Point a = v(rng), b = v(rng);
    if (a > b) std::swap(a, b);
    ivs.push_back({a, b});
  }
  int r = ray(rng);
  if (r == 1) ivs.push_back({kNegInf, v(rng)});
  if (r == 2) ivs.push_back({v(rng), kPosInf});
  return SymSet::fromIntervals(u, ivs);
}

Interval randomInterval(std::mt19937& rng) {
  std::uniform_int_distribution<int> v(-10, 10), kind(0, 3);
  Point a = v(rng), b = v(rng);
  if (a > b) std::swap(a, b);
  switch (kind(rng)) {
    case 0: return {kNegInf, kPosInf};
    case 1: return {a, kPosInf};
    case 2: return {kNegInf, b};
    default: return {a, b};
  }
}

ProdSet randomProd(std::mt19937& rng, const Universe& u) {
  std::uniform_int_distribution<int> n(0, 3);
  ProdSet p = ProdSet::empty(u);
  for (int i = n(rng); i > 0; --i) {
    Cell c{randomInterval(rng), randomInterval(rng), randomInterval(rng), randomInterval(rng)};
    p = unite(p, ProdSet::cell(u, c));
  }
  return p;
}

// Pointwise oracle: counts points of X in the box [-w,w]^2 intersected with the domain.
long countIn(const ProdSet& x, Point w) {
  long n = 0;
  for (Point h = -w; h <= w; ++h) {
    for (Point g = -w; g <= w; ++g) n += x.contains(h, g) ? 1 : 0;
  }
  return n;
}

bool oracleFinite(const ProdSet& x) { return countIn(x, 40) == countIn(x, 80); }

}  // namespace

TEST_CASE("symset canonical form") {
  auto s = SymSet::fromIntervals(Z, {{3, 5}, {6, 8}, {kNegInf, -2}});
  CHECK(s.str() == "union((-inf..-2], [3..8])");
  CHECK(s.complement().str() == "union([-1..2], [9..inf))");
  CHECK(s.star().str() == "union([-8..-3], [2..inf))");
  CHECK(SymSet::full(N).complement().isEmpty());
  CHECK(SymSet::interval(N, -5, 2).str() == "[0..2]");
  CHECK_FALSE(SymSet::full(N).hasLowerRay());
  CHECK(SymSet::full(N).hasDCC());
}

TEST_CASE("symset operations agree pointwise") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const Universe& u = (t % 3 == 0) ? N : Z;
    SymSet a = randomSet(rng, u), b = randomSet(rng, u);
    SymSet un = unite(a, b), in = intersect(a, b), mi = minus(a, b), co = a.complement();
    SymSet st = a.star();
    for (Point p = -30; p <= 30; ++p) {
      if (!u.contains(p)) continue;
      CHECK(un.contains(p) == (a.contains(p) || b.contains(p)));
      CHECK(in.contains(p) == (a.contains(p) && b.contains(p)));
      CHECK(mi.contains(p) == (a.contains(p) && !b.contains(p)));
      CHECK(co.contains(p) == !a.contains(p));
      CHECK(st.contains(p) == a.contains(u.star(p)));
    }
    CHECK((unite(a, b) == unite(b, a)));
  }
}

TEST_CASE("finite universe with permutation involution") {
  auto u = Universe::finite({"a", "b", "c"}, {1, 0, 2});
  auto s = SymSet::points(u, {0, 2});
  CHECK(s.star() == SymSet::points(u, {1, 2}));
  CHECK(s.complement() == SymSet::point(u, 1));
  CHECK_THROWS_AS(Universe::finite({"a", "b"}, {1, 1}), UnsupportedUniverse);
  CHECK_THROWS_AS(Universe::rationals(), UnsupportedUniverse);
}

TEST_CASE("product sets agree with the pointwise oracle") {
  std::mt19937 rng(11);
  for (int t = 0; t < 150; ++t) {
    const Universe u = (t % 4 == 0) ? Universe::product(N, Z) : Universe::product(Z, Z);
    ProdSet x = randomProd(rng, u), y = randomProd(rng, u);
    ProdSet un = unite(x, y), in = intersect(x, y), co = x.complement();
    for (Point h = -16; h <= 16; ++h) {
      for (Point g = -16; g <= 16; ++g) {
        bool inDom = u.left().contains(h) && u.right().contains(g);
        bool px = x.contains(h, g), py = y.contains(h, g);
        CHECK(un.contains(h, g) == (px || py));
        CHECK(in.contains(h, g) == (px && py));
        CHECK(co.contains(h, g) == (inDom && !px));
      }
    }
    CHECK(x.isFinite() == oracleFinite(x));
    CHECK((unite(co, x) == ProdSet::full(u)));
    SymSet ph = x.projectH();
    for (Point h = -16; h <= 16; ++h) {
      bool any = false;
      for (Point g = -120; g <= 120 && !any; ++g) any = x.contains(h, g);
      CHECK(ph.contains(h) == any);
      SymSet row = x.rowSection(h);
      for (Point g = -16; g <= 16; ++g) CHECK(row.contains(g) == x.contains(h, g));
    }
  }
}

TEST_CASE("stripes and sections") {
  auto u = Universe::product(Z, Z);
  auto diag = ProdSet::stripe(u, StripeKey::Diff, SymSet::point(Z, 0));
  CHECK(diag.contains(5, 5));
  CHECK_FALSE(diag.contains(5, 6));
  CHECK_FALSE(diag.isFinite());
  CHECK_FALSE(diag.infiniteRowWitness().has_value());
  auto band = ProdSet::stripe(u, StripeKey::Sum, SymSet::interval(Z, 0, kPosInf));
  CHECK(band.infiniteRowWitness().has_value());
  auto box = ProdSet::rect(u, SymSet::interval(Z, 0, 2), SymSet::interval(Z, 0, 1));
  CHECK(box.elements().size() == 6);
  CHECK(intersect(diag, box).elements().size() == 2);
}
