#pragma once

// Laurent polynomials in q with arbitrary-precision integer coefficients.

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace fcaff {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long long constant);  // NOLINT: integers embed as constants

  static LaurentPolynomial monomial(int exponent, BigInt coefficient = 1);
  static LaurentPolynomial q() { return monomial(1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Exponent -> coefficient, no zero entries.
  const std::map<int, BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(int exponent) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

  LaurentPolynomial scaled(const BigInt& factor) const;

  // Throws for q0 = 0.
  Rational evaluate(const Rational& q0) const;

  std::string to_string() const;

  // [[exp, num, den], ...] in increasing exponent; den is always 1 on output.
  nlohmann::json to_json() const;
  static LaurentPolynomial from_json(const nlohmann::json& j);

 private:
  void add_term(int exponent, const BigInt& c);

  std::map<int, BigInt> coeffs_;
};

// Parses a decimal rational "a" or "a/b".
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

}  // namespace fcaff
