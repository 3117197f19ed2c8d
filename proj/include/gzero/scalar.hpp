#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <variant>

namespace gzero {

using Integer = mpz_class;
using Rational = mpq_class;

/// Rational quaternion a + b·i + c·j + d·k. Multiplication follows the
/// Hamilton table (i·j = k, j·i = −k), so it is associative but not
/// commutative; every nonzero element is invertible through the norm form.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational a, Rational b, Rational c, Rational d);
  explicit Quaternion(const Rational& real) : a_(real) {}

  const Rational& re() const { return a_; }
  const Rational& i() const { return b_; }
  const Rational& j() const { return c_; }
  const Rational& k() const { return d_; }

  bool isZero() const;
  Quaternion conj() const;
  /// a² + b² + c² + d²
  Rational norm() const;
  Quaternion inverse() const;

  Quaternion operator-() const;
  friend Quaternion operator+(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  friend bool operator==(const Quaternion& x, const Quaternion& y);

  std::string str() const;

 private:
  Rational a_, b_, c_, d_;
};

enum class ScalarKind { Rational, Quaternion };

const char* kindName(ScalarKind kind);

/// Exact element of the coefficient skew field K: either a reduced rational
/// or a rational quaternion. Mixing the two in one operation is a TypeError.
class DivisionScalar {
 public:
  DivisionScalar() : value_(Rational(0)) {}
  DivisionScalar(Rational r);  // NOLINT(google-explicit-constructor)
  DivisionScalar(Quaternion q);  // NOLINT(google-explicit-constructor)
  DivisionScalar(long num, long den = 1);  // NOLINT(google-explicit-constructor)

  static DivisionScalar zero(ScalarKind kind);
  static DivisionScalar one(ScalarKind kind);

  ScalarKind kind() const;
  bool isZero() const;

  const Rational& rational() const;
  const Quaternion& quaternion() const;
  /// Quaternion view of either variant (rationals embed as the real part).
  Quaternion asQuaternion() const;

  DivisionScalar inverse() const;
  DivisionScalar operator-() const;

  friend DivisionScalar operator+(const DivisionScalar& x, const DivisionScalar& y);
  friend DivisionScalar operator-(const DivisionScalar& x, const DivisionScalar& y);
  friend DivisionScalar operator*(const DivisionScalar& x, const DivisionScalar& y);
  friend bool operator==(const DivisionScalar& x, const DivisionScalar& y);

  DivisionScalar& operator+=(const DivisionScalar& y) { return *this = *this + y; }

  /// Serialized literal: `3/4`, `-2`, `q(1,0,-1/2,0)`.
  std::string str() const;

 private:
  std::variant<Rational, Quaternion> value_;
};

/// Division helpers on the two sides; K is noncommutative.
DivisionScalar leftDivide(const DivisionScalar& divisor, const DivisionScalar& x);

}  // namespace gzero
