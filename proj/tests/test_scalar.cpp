#include <doctest.h>

#include "zzosp/scalar.hpp"

using zzosp::Rational;
using zzosp::Scalar;

TEST_CASE("scalar arithmetic") {
  const Scalar r2 = Scalar::sqrt2();
  CHECK(r2 * r2 == Scalar(2));
  CHECK(zzosp::scalar_add(Scalar(1), r2) == Scalar(1, 1));
  CHECK(zzosp::scalar_mul(Scalar(1, 1), Scalar(1, -1)) == Scalar(-1));
  CHECK((Scalar(3) - Scalar(3)).is_zero());
  CHECK(Scalar(Rational(2, 4)) == Scalar(Rational(1, 2)));
}

TEST_CASE("scalar inverse") {
  const Scalar x(1, 1);
  const Scalar inv = zzosp::scalar_inv(x);
  CHECK(inv == Scalar(-1, 1));
  CHECK(x * inv == Scalar(1));

  const Scalar y(Rational(3, 7), Rational(-5, 2));
  CHECK(y * y.inverse() == Scalar(1));
  CHECK(y / y == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), zzosp::DivisionByZero);
}

TEST_CASE("scalar norm and conjugate") {
  const Scalar x(2, 3);
  CHECK(x.norm() == Rational(4 - 18));
  CHECK(x * x.conjugate() == Scalar(x.norm()));
}

TEST_CASE("scalar printing") {
  CHECK(Scalar(0).to_string() == "0");
  CHECK(Scalar(Rational(-3, 2)).to_string() == "-3/2");
  CHECK(Scalar::sqrt2().to_string().find("sqrt2") != std::string::npos);
}

TEST_CASE("scalar field axioms on a small sample") {
  std::vector<Scalar> xs = {Scalar(0), Scalar(1), Scalar(-1), Scalar::sqrt2(), Scalar(Rational(1, 3), -2),
                            Scalar(Rational(-7, 5), Rational(2, 9))};
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : xs) {
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
      }
    }
  }
}
