#include "fcaff/laurent.hpp"

#include <limits>

#include "fcaff/error.hpp"

namespace fcaff {

LaurentPolynomial::LaurentPolynomial(long long constant) {
  add_term(0, BigInt(constant));
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent,
                                              BigInt coefficient) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  auto const it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(int exponent, const BigInt& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      coeffs_.erase(it);
    }
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) {
    add_term(e, c);
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) {
    add_term(e, -c);
  }
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.coeffs_) {
    c = -c;
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const BigInt& factor) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeffs_) {
    out.add_term(e, c * factor);
  }
  return out;
}

Rational LaurentPolynomial::evaluate(const Rational& q0) const {
  if (q0 == 0) {
    throw Error("cannot evaluate a Laurent polynomial at q = 0");
  }
  Rational total = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational power = 1;
    Rational const base = e >= 0 ? q0 : Rational(1) / q0;
    for (int i = 0; i < std::abs(e); ++i) {
      power *= base;
    }
    total += Rational(c) * power;
  }
  return total;
}

std::string LaurentPolynomial::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto const& [e, c] = *it;
    BigInt const mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) {
      out += mag.str();
    }
    out += "q";
    if (e != 1) {
      out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

nlohmann::json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min()
      && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return BigInt(j.get<long long>());
  }
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error("malformed integer '" + j.get<std::string>() + "'");
    }
  }
  throw Error("expected an integer in coefficient JSON");
}

}  // namespace

nlohmann::json LaurentPolynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : coeffs_) {
    out.push_back({e, bigint_json(c), 1});
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw Error("coefficient JSON must be an array of [exp, num, den]");
  }
  LaurentPolynomial out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer()) {
      throw Error("coefficient term must be [exp, num, den]");
    }
    BigInt const num = bigint_from_json(term[1]);
    BigInt const den = bigint_from_json(term[2]);
    if (den == 0 || num % den != 0) {
      throw Error("coefficient " + num.str() + "/" + den.str()
                  + " is not an integer");
    }
    out.add_term(term[0].get<int>(), num / den);
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  try {
    auto const slash = text.find('/');
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt const den(text.substr(slash + 1));
    if (den == 0) {
      throw Error("zero denominator in '" + text + "'");
    }
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("malformed rational '" + text + "'");
  }
}

std::string format_rational(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return r.str();
}

}  // namespace fcaff
