#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace zzosp {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const mpz_class& num, const mpz_class& den);

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element rat + irr*sqrt(2) of the quadratic field Q(sqrt 2).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational rat, Rational irr = 0);

  static Scalar sqrt2() { return Scalar(0, 1); }

  const Rational& rational_part() const { return rat_; }
  const Rational& sqrt2_part() const { return irr_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }

  /// Field norm rat^2 - 2 irr^2; nonzero for every nonzero element.
  Rational norm() const { return rat_ * rat_ - 2 * irr_ * irr_; }
  Scalar conjugate() const { return Scalar(rat_, -irr_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-rat_, -irr_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }

  /// Human-readable form, e.g. "-1/2 + 3*sqrt2".
  std::string to_string() const;

 private:
  void canonicalize();

  Rational rat_;
  Rational irr_;
};

inline Scalar scalar_add(const Scalar& x, const Scalar& y) { return x + y; }
inline Scalar scalar_mul(const Scalar& x, const Scalar& y) { return x * y; }
inline Scalar scalar_inv(const Scalar& x) { return x.inverse(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace zzosp
