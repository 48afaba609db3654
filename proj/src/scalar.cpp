#include "zzosp/scalar.hpp"

#include <sstream>

namespace zzosp {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Scalar::Scalar(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {
  canonicalize();
}

void Scalar::canonicalize() {
  rat_.canonicalize();
  irr_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt2)");
  // 1/(a + b sqrt2) = (a - b sqrt2) / (a^2 - 2 b^2)
  const Rational n = norm();
  return Scalar(rat_ / n, -irr_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(o.irr_) == 0) {
    rat_ *= o.rat_;
    irr_ *= o.rat_;
    return *this;
  }
  Rational r = rat_ * o.rat_ + 2 * irr_ * o.irr_;
  Rational i = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  return *this;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (sgn(irr_) == 0) {
    os << rat_;
  } else if (sgn(rat_) == 0) {
    os << irr_ << "*sqrt2";
  } else {
    os << rat_ << (sgn(irr_) < 0 ? " - " : " + ") << Rational(abs(irr_)) << "*sqrt2";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace zzosp
