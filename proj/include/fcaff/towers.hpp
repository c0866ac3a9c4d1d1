#pragma once

// The injections I, J : W^c(Ã_{n-1}) -> W^c(Ã_n) and the coset
// decomposition of fully commutative elements along R_n.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcaff/affine_permutation.hpp"
#include "fcaff/normal_form.hpp"
#include "fcaff/word.hpp"

namespace fcaff {

// Letterwise a_n -> sigma_n a_{n+1} (I) or a_n -> a_{n+1} sigma_n (J), from
// rank w.n to rank w.n + 1. Defined for every word, including rank 1.
Word substitute_I(const Word& w);
Word substitute_J(const Word& w);

// Normal form over rank nf.n + 1. I keeps every parameter; J follows the
// case analysis on (p, k, j, r_p). Both throw on invalid input.
NormalForm inject_I(const NormalForm& nf);
NormalForm inject_J(const NormalForm& nf);

struct Report {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  nlohmann::json to_json() const;
};

// Over every FC element of rank n_minus_1 and length <= bound: emitted words
// of I and J are reduced FC of length l + L with the same affine length, the
// closed forms agree with substitute-then-parse, I and J are injective,
// I(w) = J(w) exactly for the A variant, and the images meet exactly there.
Report images_meet(int n_minus_1, std::size_t bound, unsigned jobs = 1);

// Substituting into sigma_{n-1} a_n sigma_{n-1} and a_n sigma_{n-1} a_n
// (two words for one element of rank n-1) gives distinct elements of rank n.
bool substitution_separates_braid_pair(int n);

// c_n = sigma_n ... sigma_1 a_{n+1}.
Word coxeter_element(int n);

struct CorollaryDecomposition {
  std::optional<int> prefix_i;  // w = ⌊i,1⌋ a_{n+1} d c^t ⌊n,s⌋ when set
  AffinePermutation d;          // fixes n+1
  int t = 0;
  int s = 0;  // 1..n+1, ⌊n,n+1⌋ empty
};

// The decomposition w = [⌊i,1⌋ a_{n+1}] d c_n^t sigma_n ... sigma_s with d
// in R_n(W(Ã_{n-1})). The prefixed form is used exactly when the normal form
// of w starts with h(i_1, n+1) a_{n+1}, i_1 < n. Given the prefix, (t, s)
// and d are unique. Throws for non-FC input.
CorollaryDecomposition corollary_decompose(const Word& w);

// Every choice of prefix (none, or i = 0..n-1) for which a decomposition
// exists. An element may admit more than one: s2 a = a (s2 a s2) in rank 2.
std::vector<CorollaryDecomposition> corollary_all_forms(const Word& w);

AffinePermutation assemble(int n, const CorollaryDecomposition& dec);

nlohmann::json to_json(const CorollaryDecomposition& dec);

}  // namespace fcaff
