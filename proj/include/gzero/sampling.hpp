#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "gzero/filter.hpp"
#include "gzero/matrix.hpp"

namespace gzero {

inline constexpr const char* kDefaultSeed = "0xF1L7ER";

/// Hex literals parse as numbers; anything else is hashed (FNV-1a), so
/// non-hex seeds such as the default still give a fixed stream.
std::uint64_t parseSeed(const std::string& text);

/// Deterministic generator of semilinear test sets. Sets mix finite point
/// clusters, bounded intervals and rays, then optionally take the star or
/// complement.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, Point spread = 12) : rng_(seed), spread_(spread) {}

  SymSet set(const Universe& u);
  ProdSet prodSet(const Universe& u);
  /// Random filter expression of depth at most `depth`, built verbatim
  /// (no rewrites) from the one-dimensional atoms and combinators.
  Filter filter(const Universe& u, int depth);
  DivisionScalar scalar(ScalarKind kind = ScalarKind::Rational);
  /// A few point masses plus, where the universe allows, periodic tails.
  FormalSum sum(const Universe& u, ScalarKind kind = ScalarKind::Rational, Side side = Side::Column,
                bool tails = true);
  /// Explicit on finite universes; otherwise any of the four bodies.
  SymMatrix matrix(const Universe& h, const Universe& g, ScalarKind kind = ScalarKind::Rational);
  Interval interval();
  Point point(Point lo, Point hi);
  bool coin(double p = 0.5);
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  Point spread_;
};

}  // namespace gzero
