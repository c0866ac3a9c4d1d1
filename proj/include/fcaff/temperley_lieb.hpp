#pragma once

// The affine Temperley–Lieb algebra of W(Ã_n) over Z[q, q^{-1}], in the
// basis {g_w : w fully commutative}, and the tower map to rank n+1.
//
// Basis elements are keyed internally by their periodic permutation; the
// external key is the canonical normal-form JSON (rank >= 2) or
// {"n":1,"word":...} in rank 1, where every element is fully commutative.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcaff/affine_permutation.hpp"
#include "fcaff/laurent.hpp"
#include "fcaff/word.hpp"

namespace fcaff {

struct TLElement {
  int n = 1;
  std::map<AffinePermutation, LaurentPolynomial> terms;  // no zero values

  bool is_zero() const noexcept { return terms.empty(); }
  LaurentPolynomial coefficient(const AffinePermutation& w) const;

  TLElement& operator+=(const TLElement& other);
  TLElement& operator-=(const TLElement& other);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  TLElement scaled(const LaurentPolynomial& c) const;
  friend bool operator==(const TLElement&, const TLElement&) = default;
};

enum class Side { Left, Right };

TLElement tl_one(int n);
TLElement tl_generator(int n, Letter s);
// g_w for a fully commutative element; throws otherwise.
TLElement tl_basis(const AffinePermutation& w);
TLElement tl_basis(const Word& w);

// x·g_s or g_s·x. Products that leave the fully commutative set are
// rewritten through g_x g_y g_x = -(g_x g_y + g_y g_x + g_x + g_y + 1).
TLElement tl_mul_gen(const TLElement& x, Letter s, Side side);
TLElement tl_mul(const TLElement& x, const TLElement& y);
// g_{s_1} ... g_{s_k} for an arbitrary word.
TLElement tl_word(const Word& w);

// V(x, y) = xyx + xy + yx + x + y + 1.
TLElement tl_V(const TLElement& x, const TLElement& y);

// The algebra map from rank n to rank n+1 sending t_{sigma_i} to g_{sigma_i}
// and t_{a_{n+1}} to g_{sigma_{n+1}} g_{a_{n+2}} g_{sigma_{n+1}}^{-1}.
TLElement tower_R(const TLElement& x);
// The image of t_{a_{n+1}}.
TLElement tower_R_affine_image(int n);

std::string basis_key(const AffinePermutation& w);
nlohmann::json basis_key_json(const AffinePermutation& w);
AffinePermutation basis_from_key(int n, const nlohmann::json& key);

// Terms sorted by key string.
nlohmann::json to_json(const TLElement& x);
TLElement tl_from_json(const nlohmann::json& j);
std::string format_element(const TLElement& x);

struct PropFormulaReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  nlohmann::json to_json() const;
};

// For each FC w over rank n-1 with L(w) >= 1 and l(w) + L(w) <= bound: in
// tower_R(t_w) the coefficient of g_{I(w)} is (-1)^L, that of g_{J(w)} is
// (-1/q)^L, and every other key x has l(x) < l(I(w)) and L(x) <= L(w).
PropFormulaReport check_prop_formula(int n, std::size_t bound,
                                     unsigned jobs = 1);

struct RankReport {
  std::size_t family_size = 0;
  std::size_t basis_keys = 0;
  std::vector<std::pair<Rational, std::size_t>> ranks;  // (q0, rank)
  bool leading_keys_distinct = false;
  std::vector<std::string> notes;
  bool full_rank() const;
  nlohmann::json to_json() const;
};

// The family {tower_R(t_w) : w FC over rank n-1, l(w) + L(w) <= bound}
// evaluated at each q0, and the distinctness of the leading keys I(w), J(w).
RankReport check_theoremF_rank(int n, std::size_t bound,
                               const std::vector<Rational>& points,
                               unsigned jobs = 1);

// Exact rank over Q by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace fcaff
