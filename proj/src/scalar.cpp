#include "gzero/scalar.hpp"

#include "gzero/error.hpp"

namespace gzero {

namespace {

std::string rationalStr(const Rational& r) { return r.get_str(); }

void requireSameKind(const DivisionScalar& x, const DivisionScalar& y, const char* op) {
  if (x.kind() != y.kind()) {
    throw TypeError(std::string("scalar ") + op + ": " + kindName(x.kind()) + " vs " +
                    kindName(y.kind()));
  }
}

}  // namespace

Quaternion::Quaternion(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

bool Quaternion::isZero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

Quaternion Quaternion::conj() const { return {a_, -b_, -c_, -d_}; }

Rational Quaternion::norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

Quaternion Quaternion::inverse() const {
  if (isZero()) throw DivisionByZero("inverse of zero quaternion");
  Rational n = norm();
  return {a_ / n, -b_ / n, -c_ / n, -d_ / n};
}

Quaternion Quaternion::operator-() const { return {-a_, -b_, -c_, -d_}; }

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  return {x.a_ * y.a_ - x.b_ * y.b_ - x.c_ * y.c_ - x.d_ * y.d_,
          x.a_ * y.b_ + x.b_ * y.a_ + x.c_ * y.d_ - x.d_ * y.c_,
          x.a_ * y.c_ - x.b_ * y.d_ + x.c_ * y.a_ + x.d_ * y.b_,
          x.a_ * y.d_ + x.b_ * y.c_ - x.c_ * y.b_ + x.d_ * y.a_};
}

bool operator==(const Quaternion& x, const Quaternion& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string Quaternion::str() const {
  return "q(" + rationalStr(a_) + "," + rationalStr(b_) + "," + rationalStr(c_) + "," +
         rationalStr(d_) + ")";
}

const char* kindName(ScalarKind kind) {
  return kind == ScalarKind::Rational ? "rational" : "quaternion";
}

DivisionScalar::DivisionScalar(Rational r) : value_(std::move(r)) {
  std::get<Rational>(value_).canonicalize();
}

DivisionScalar::DivisionScalar(Quaternion q) : value_(std::move(q)) {}

DivisionScalar::DivisionScalar(long num, long den) {
  if (den == 0) throw DivisionByZero("rational literal with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  value_ = std::move(r);
}

DivisionScalar DivisionScalar::zero(ScalarKind kind) {
  if (kind == ScalarKind::Quaternion) return Quaternion();
  return Rational(0);
}

DivisionScalar DivisionScalar::one(ScalarKind kind) {
  if (kind == ScalarKind::Quaternion) return Quaternion(Rational(1));
  return Rational(1);
}

ScalarKind DivisionScalar::kind() const {
  return std::holds_alternative<Rational>(value_) ? ScalarKind::Rational
                                                  : ScalarKind::Quaternion;
}

bool DivisionScalar::isZero() const {
  if (auto r = std::get_if<Rational>(&value_)) return *r == 0;
  return std::get<Quaternion>(value_).isZero();
}

const Rational& DivisionScalar::rational() const {
  if (auto r = std::get_if<Rational>(&value_)) return *r;
  throw TypeError("scalar is a quaternion, rational expected");
}

const Quaternion& DivisionScalar::quaternion() const {
  if (auto q = std::get_if<Quaternion>(&value_)) return *q;
  throw TypeError("scalar is rational, quaternion expected");
}

Quaternion DivisionScalar::asQuaternion() const {
  if (auto r = std::get_if<Rational>(&value_)) return Quaternion(*r);
  return std::get<Quaternion>(value_);
}

DivisionScalar DivisionScalar::inverse() const {
  if (isZero()) throw DivisionByZero("inverse of zero");
  if (auto r = std::get_if<Rational>(&value_)) return Rational(1 / *r);
  return std::get<Quaternion>(value_).inverse();
}

DivisionScalar DivisionScalar::operator-() const {
  if (auto r = std::get_if<Rational>(&value_)) return Rational(-*r);
  return -std::get<Quaternion>(value_);
}

DivisionScalar operator+(const DivisionScalar& x, const DivisionScalar& y) {
  requireSameKind(x, y, "add");
  if (x.kind() == ScalarKind::Rational) return Rational(x.rational() + y.rational());
  return x.quaternion() + y.quaternion();
}

DivisionScalar operator-(const DivisionScalar& x, const DivisionScalar& y) {
  requireSameKind(x, y, "sub");
  if (x.kind() == ScalarKind::Rational) return Rational(x.rational() - y.rational());
  return x.quaternion() - y.quaternion();
}

DivisionScalar operator*(const DivisionScalar& x, const DivisionScalar& y) {
  requireSameKind(x, y, "mul");
  if (x.kind() == ScalarKind::Rational) return Rational(x.rational() * y.rational());
  return x.quaternion() * y.quaternion();
}

bool operator==(const DivisionScalar& x, const DivisionScalar& y) {
  if (x.kind() != y.kind()) return false;
  if (x.kind() == ScalarKind::Rational) return x.rational() == y.rational();
  return x.quaternion() == y.quaternion();
}

std::string DivisionScalar::str() const {
  if (auto r = std::get_if<Rational>(&value_)) return rationalStr(*r);
  return std::get<Quaternion>(value_).str();
}

DivisionScalar leftDivide(const DivisionScalar& divisor, const DivisionScalar& x) {
  return divisor.inverse() * x;
}

}  // namespace gzero
