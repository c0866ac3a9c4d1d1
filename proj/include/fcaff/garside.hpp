#pragma once

// Artin braid groups on m strands and their left-greedy Garside normal form.

#include <string>
#include <vector>

#include <json.hpp>

namespace fcaff {

struct ArtinLetter {
  int index = 1;  // generator b_index, 1..m-1
  int sign = 1;   // +1 or -1

  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

struct SignedBraidWord {
  int strands = 2;
  std::vector<ArtinLetter> letters;

  SignedBraidWord() = default;
  SignedBraidWord(int m, std::vector<ArtinLetter> ls);

  SignedBraidWord inverse() const;
  SignedBraidWord operator*(const SignedBraidWord& other) const;
  friend bool operator==(const SignedBraidWord&,
                         const SignedBraidWord&) = default;
};

// Cancels adjacent b b^{-1} pairs until none remain.
SignedBraidWord free_reduce(const SignedBraidWord& w);

std::string format_artin(const SignedBraidWord& w);

// A permutation braid, stored as the images of 0..m-1. The braid word
// b_{i_1} ... b_{i_k} corresponds to the composite s_{i_1} ∘ ... ∘ s_{i_k}.
using Permutation = std::vector<int>;

struct GarsideNormalForm {
  int strands = 2;
  int infimum = 0;                   // power of the half twist Δ
  std::vector<Permutation> factors;  // left-weighted, none trivial or Δ

  friend bool operator==(const GarsideNormalForm&,
                         const GarsideNormalForm&) = default;
};

GarsideNormalForm garside_normal_form(const SignedBraidWord& w);

// A word for the normal form: Δ^infimum followed by a reduced word of each
// factor.
SignedBraidWord normal_form_word(const GarsideNormalForm& nf);

// Every descent of b's left end is a descent of a's right end.
bool is_left_weighted(const Permutation& a, const Permutation& b);

// Factors printed as images of 1..m.
nlohmann::json to_json(const GarsideNormalForm& nf);

}  // namespace fcaff
