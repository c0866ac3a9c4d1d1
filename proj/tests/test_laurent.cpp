#include <doctest.h>

#include "fcaff/error.hpp"
#include "fcaff/laurent.hpp"

using namespace fcaff;

TEST_CASE("Laurent arithmetic") {
  auto const q = LaurentPolynomial::q();
  auto const qinv = LaurentPolynomial::monomial(-1);
  auto const sq = (q - 1) * (q - 1);
  CHECK(sq == q * q - q.scaled(2) + 1);
  CHECK(sq.to_string() == "q^2 - 2q + 1");
  CHECK((-qinv) * (-qinv) == LaurentPolynomial::monomial(-2));
  CHECK(sq.evaluate(3) == 4);
  CHECK(qinv.evaluate(Rational(2, 3)) == Rational(3, 2));
  CHECK_THROWS_AS(q.evaluate(0), Error);
  CHECK((q - q).is_zero());
  CHECK((q * qinv) == LaurentPolynomial(1));
  CHECK((-qinv).to_string() == "-q^-1");
  CHECK(LaurentPolynomial().to_string() == "0");
  CHECK(sq.coefficient(1) == -2);
  CHECK(sq.coefficient(5) == 0);
  BigInt big = 1;
  for (int i = 0; i < 80; ++i) {
    big *= 3;
  }
  auto const huge = LaurentPolynomial::monomial(4, big);
  CHECK((huge * huge).coefficient(8) == big * big);
}

TEST_CASE("ring axioms on samples") {
  auto const q = LaurentPolynomial::q();
  std::vector<LaurentPolynomial> const samples{
      0, 1, q, q - 1, LaurentPolynomial::monomial(-1) - 1,
      q * q - q.scaled(3) + LaurentPolynomial::monomial(-2, 5)};
  for (const auto& x : samples) {
    for (const auto& y : samples) {
      CHECK(x * y == y * x);
      CHECK(x + y == y + x);
      for (const auto& z : samples) {
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y).evaluate(Rational(7, 3))
              == x.evaluate(Rational(7, 3)) * y.evaluate(Rational(7, 3)));
      }
    }
  }
}

TEST_CASE("Laurent JSON and rationals") {
  auto const p = LaurentPolynomial::monomial(-1, -3) + 2;
  CHECK(p.to_json().dump() == "[[-1,-3,1],[0,2,1]]");
  CHECK(LaurentPolynomial::from_json(p.to_json()) == p);
  CHECK(LaurentPolynomial::from_json(nlohmann::json::parse("[[2,6,3]]"))
        == LaurentPolynomial::monomial(2, 2));
  CHECK_THROWS_AS(LaurentPolynomial::from_json(nlohmann::json::parse("[[0,1,2]]")),
                  Error);
  CHECK_THROWS_AS(LaurentPolynomial::from_json(nlohmann::json::parse("[[0,1]]")),
                  Error);
  CHECK(parse_rational("7/3") == Rational(7, 3));
  CHECK(parse_rational("-5") == -5);
  CHECK(format_rational(Rational(-10, 2)) == "-5");
  CHECK(format_rational(Rational(7, 3)) == "7/3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}
