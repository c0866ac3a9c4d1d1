#pragma once

// Length, descents, reduction and the rank-raising homomorphism
// R_n : W(Ã_{n-1}) -> W(Ã_n) in the periodic-permutation model.

#include <cstddef>
#include <vector>

#include "fcaff/affine_permutation.hpp"
#include "fcaff/word.hpp"

namespace fcaff {

AffinePermutation to_permutation(const Word& w);

std::vector<Letter> right_descents(const AffinePermutation& u);
std::vector<Letter> left_descents(const AffinePermutation& u);

// Coxeter length, by stripping right descents until the identity is reached.
std::size_t length(const AffinePermutation& u);

bool is_reduced(const Word& w);

// The lexicographically smallest reduced word of u under s1 < ... < sn < a,
// built by repeatedly stripping the smallest left descent.
Word canonical_word(const AffinePermutation& u);

// canonical_word(to_permutation(w)).
Word reduce(const Word& w);

// Letterwise sigma_i -> sigma_i, a_n -> sigma_n a_{n+1} sigma_n from rank
// n-1 to rank n.
Word coxeter_Rn(const Word& w);

// u lies in R_n(W(Ã_{n-1})) iff it fixes n+1.
bool in_image_Rn(const AffinePermutation& u);

// Inverse of R_n on its image; conjugates by phi(i + kn) = i + k(n+1).
// Throws if u is not in the image or n < 2.
AffinePermutation retract_Rn(const AffinePermutation& u);

struct Element {
  AffinePermutation perm;
  Word word;  // canonical reduced word
};

// Every element of length <= max_len, by breadth-first search of the Cayley
// graph. Sorted by (length, canonical word). Throws ResourceLimit above
// `cap` elements.
std::vector<Element> enumerate_elements(int n, std::size_t max_len,
                                        std::size_t cap = 5'000'000);

}  // namespace fcaff
