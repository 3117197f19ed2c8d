#include "doctest.h"
#include "gzero/eval.hpp"
#include "gzero/sampling.hpp"

using namespace gzero;
using namespace gzero::dsl;

namespace {

const Universe Z = Universe::intLine();
const Universe N = Universe::intHalfLine();

void roundTrip(const std::string& text) {
  const Node n = parseExpression(text);
  CHECK_MESSAGE(parseExpression(print(n)) == n, text);
}

QueryResult runOne(const std::string& text) {
  Evaluator ev;
  auto rs = ev.runProgram(text);
  REQUIRE(!rs.empty());
  return rs.back();
}

}  // namespace

TEST_CASE("printed forms of sampled objects parse back and evaluate to themselves") {
  Sampler s(7, 6);
  Evaluator ev;
  for (const Universe& u : {Z, N}) {
    for (int i = 0; i < 100; ++i) {
      const SymSet a = s.set(u);
      roundTrip(a.str());
      CHECK(ev.lineSet(parseExpression(a.str()), u) == a);

      const Filter f = s.filter(u, 3);
      roundTrip(f.str());
      CHECK(ev.filter(parseExpression(f.str()), u) == normalize(f));
      CHECK_FALSE(equivalent(ev.filter(parseExpression(f.str()), u), f).tri.isNo());

      const FormalSum k = s.sum(u);
      roundTrip(k.str());
      CHECK(ev.sum(parseExpression(k.str()), u) == k);
    }
  }
  for (int i = 0; i < 100; ++i) {
    const SymMatrix m = s.matrix(Z, Z);
    roundTrip(m.str());
    CHECK_MESSAGE(ev.matrix(parseExpression(m.str()), Z, Z).str() == m.str(), m.str());
  }
}

TEST_CASE("statements print and parse back") {
  const std::string program =
      "universe Z\n"
      "let F = perp(dcc)\n"
      "check member F [5..inf)\n"
      "pair row(chi([0..inf))) chi([0..inf))\n"
      "mul (conv(fsum{0:1, 1:-1}, s) * conv(fsum{0:1}, s)) unit\n";
  const auto stmts = parse(program);
  REQUIRE(stmts.size() == 5);
  CHECK(stmts[2].check);
  CHECK(parse(print(stmts)) == stmts);
}

TEST_CASE("syntax errors carry the column") {
  try {
    parse("member dcc");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 11);
  }
  CHECK_THROWS_AS(parse("member dcc [0..inf"), SyntaxError);
  CHECK_THROWS_AS(parse("frobnicate all"), SyntaxError);
}

TEST_CASE("a call needs its bracket glued to the name") {
  CHECK(runOne("member dcc (-inf..0]").verdict == "yes");
  CHECK(runOne("member acc (-inf..0]").verdict == "no");
}

TEST_CASE("let is evaluated in the universe of each use") {
  const auto rs = runOne("let A = [-3..inf)\nuniverse N\nmember cof A");
  CHECK(rs.verdict == "yes");
  const auto z = runOne("let A = [-3..inf)\nmember cof A");
  CHECK(z.verdict == "no");
}

TEST_CASE("check fails unless the answer is yes or a value") {
  CHECK(runOne("check member dcc [0..inf)").failed());
  CHECK(runOne("check member dcc (-inf..0]").failed() == false);
  CHECK(runOne("check member acc (-inf..0]").failed());
  CHECK(!runOne("member acc (-inf..0]").failed());
  CHECK(runOne("member nosuch [0..1]").failed());
}

TEST_CASE("undefined operations become No with a witness") {
  const auto r = runOne("pair row(chi([0..inf))) chi((-inf..0])");
  CHECK(r.verdict == "no");
  CHECK(r.witness.has_value());
}
