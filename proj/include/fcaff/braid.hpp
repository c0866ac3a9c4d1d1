#pragma once

// The affine braid group B(Ã_n), decided through the embedding
// B(Ã_n) ⊂ B(B_{n+1}) ⊂ B_{n+2}:
//     sigma_i -> b_{i+1},   a_{n+1} -> τ b_{n+1} τ^{-1},   τ = b_1 b_1 b_2 ... b_{n+1}.
//
// A formal word over Ã_{n-1} is an AffineBraidWord of rank n-1; its letter n
// is a_n. flatten() realises R_n on such words.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fcaff/garside.hpp"
#include "fcaff/word.hpp"

namespace fcaff {

struct BraidLetter {
  Letter letter = 1;
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct AffineBraidWord {
  int n = 1;
  std::vector<BraidLetter> letters;

  AffineBraidWord() = default;
  AffineBraidWord(int rank, std::vector<BraidLetter> ls);
  static AffineBraidWord identity(int rank) { return {rank, {}}; }

  bool is_positive() const noexcept;
  AffineBraidWord inverse() const;
  AffineBraidWord operator*(const AffineBraidWord& other) const;
  AffineBraidWord power(int k) const;
  friend bool operator==(const AffineBraidWord&,
                         const AffineBraidWord&) = default;
};

// The positive braid given by the same expression as a Coxeter word.
AffineBraidWord positive_lift(const Word& w);

// Tokens `s<i>`, `a`, each optionally prefixed by `!` for the inverse.
AffineBraidWord parse_braid_word(int n, std::string_view text);
std::string format_braid_word(const AffineBraidWord& w);

SignedBraidWord embed_to_artin(const AffineBraidWord& w);

// Throws on rank mismatch.
bool braid_equal(const AffineBraidWord& x, const AffineBraidWord& y);

// Equality of positive words by closure under braid and commutation moves.
// Throws on non-positive input or when the closure exceeds `cap` words.
bool positive_class_equal(const AffineBraidWord& x, const AffineBraidWord& y,
                          std::size_t cap = 2'000'000);

// c_n = sigma_n ... sigma_1 a_{n+1}, n >= 2.
AffineBraidWord c_word(int n);

// The Dynkin rotation on the formal alphabet of rank w.n:
// sigma_1 -> a, sigma_i -> sigma_{i-1}, a -> sigma_{w.n}.
AffineBraidWord psi(const AffineBraidWord& w, int times = 1);

// R_n: rank w.n to rank w.n + 1, a_n -> sigma_n a_{n+1} sigma_n^{-1}.
AffineBraidWord flatten(const AffineBraidWord& w);

// The factors of y^k = u c^t v for y = h_n(j, j+1) a_{n+1}, with u formal
// over rank n-1 and v a positive word in sigma_1..sigma_n.
struct Lemma31Sides {
  AffineBraidWord lhs;
  AffineBraidWord u;
  int t = 0;
  Word v;
  char case_label = 'n';  // 'n' for j = n, '0' for m = 0, 'm' for m > 0
};

Lemma31Sides lemma31_sides(int n, int j, int k);
bool verify_lemma31(int n, int j, int k);

struct BraidDecomposition {
  std::optional<int> prefix_i;  // ⌊i,1⌋ a_{n+1} in front when set
  AffineBraidWord u;            // formal word over rank n-1
  int t = 0;
  Word v;  // sigma letters only
};

AffineBraidWord assemble(int n, const BraidDecomposition& dec);

// The decomposition of the fully commutative braid g(w), following the case
// analysis on the normal form of w and certified by braid_equal. Throws for
// non-FC input or if certification fails.
BraidDecomposition decompose_fc_braid(const Word& w);

nlohmann::json to_json(const BraidDecomposition& dec);

}  // namespace fcaff
