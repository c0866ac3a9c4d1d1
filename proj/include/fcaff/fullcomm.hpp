#pragma once

// Full commutativity in W(Ã_n): commutation classes, braid-factor witnesses,
// affine length and brute-force enumeration of W^c(Ã_n).

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fcaff/affine_permutation.hpp"
#include "fcaff/word.hpp"

namespace fcaff {

inline constexpr std::size_t kDefaultClassCap = 2'000'000;

struct CommutationClass {
  Word representative;        // lexicographically smallest member
  std::vector<Word> members;  // sorted
};

// Closure of a reduced word under swaps of adjacent commuting letters.
// Throws on non-reduced input or when the class exceeds `cap` words.
CommutationClass commutation_class(const Word& w,
                                   std::size_t cap = kDefaultClassCap);

// A member of the commutation class carrying a factor x y x with x, y joined
// in the Dynkin diagram, starting at `position`.
struct BraidWitness {
  Word member;
  std::size_t position = 0;
};

// Searches the commutation class of the reduced word w for a braid factor.
std::optional<BraidWitness> find_braid_factor(
    const Word& w, std::size_t cap = kDefaultClassCap);

// Reduces w first; true iff no member of the commutation class of the
// reduced word contains a braid factor.
bool is_fully_commutative(const Word& w, std::size_t cap = kDefaultClassCap);
bool is_fully_commutative(const AffinePermutation& u,
                          std::size_t cap = kDefaultClassCap);

std::map<Letter, std::size_t> occurrence_profile(const Word& w);

// Every reduced expression of the element of the reduced word w, by closure
// under commutation and braid moves. Sorted.
std::vector<Word> all_reduced_expressions(const Word& w,
                                          std::size_t cap = kDefaultClassCap);

// True iff every reduced expression of the element of w has the same
// occurrence profile.
bool check_HIT(const Word& w, std::size_t cap = kDefaultClassCap);

// Number of a_{n+1} in a reduced word. Throws for non-FC input, where the
// count need not be well defined.
std::size_t affine_length(const Word& w);

struct FCElement {
  AffinePermutation perm;
  Word word;  // canonical reduced word
  std::size_t affine_length = 0;

  std::size_t length() const noexcept { return word.size(); }
};

// Every fully commutative element of length <= max_len, sorted by
// (length, canonical word). Each layer is extended by right multiplication
// (W^c is closed under reduced prefixes) and the FC tests of a layer may be
// spread over `jobs` threads; the output does not depend on `jobs`.
std::vector<FCElement> enumerate_fc(int n, std::size_t max_len,
                                    unsigned jobs = 1,
                                    std::size_t element_cap = 5'000'000);

}  // namespace fcaff
