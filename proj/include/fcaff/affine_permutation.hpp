#pragma once

// W(Ã_n) as the group of (n+1)-periodic permutations u of Z with
// sum_{i=1}^{n+1} (u(i) - i) = 0.
//
// Convention: a word s_1 s_2 ... s_k denotes the composite function
// s_1 ∘ s_2 ∘ ... ∘ s_k (rightmost factor acts first). Hence right
// multiplication u·s_i swaps the window positions i and i+1, and left
// multiplication s_i·u applies s_i to the window values. The right descent
// test derived from this convention is
//     s_i   (1 <= i <= n) :  u(i)   > u(i+1)
//     a_{n+1}             :  u(n+1) > u(n+2) = u(1) + (n+1).
//
// Window entries are int64_t: each generator moves an entry by one, so an
// entry exceeds its position by at most the length of the word producing it.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fcaff/word.hpp"

namespace fcaff {

class AffinePermutation {
 public:
  using value_type = std::int64_t;

  // Throws if the residues are not a complete system or the total shift
  // is non-zero.
  AffinePermutation(int n, std::vector<value_type> window);

  static AffinePermutation identity(int n);
  static AffinePermutation generator(int n, Letter s);

  int rank() const noexcept { return n_; }
  int period() const noexcept { return n_ + 1; }
  const std::vector<value_type>& window() const noexcept { return window_; }

  // u(k) for any integer k, through periodicity.
  value_type operator()(value_type k) const;

  AffinePermutation times_generator(Letter s) const;  // u·s
  AffinePermutation generator_times(Letter s) const;  // s·u

  bool has_right_descent(Letter s) const;
  bool has_left_descent(Letter s) const;

  bool is_identity() const;
  // True iff the element lies in the parabolic subgroup W(A_n).
  bool is_finite_part() const;

  std::string to_string() const;

  friend bool operator==(const AffinePermutation&,
                         const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&,
                          const AffinePermutation&) = default;

 private:
  struct Unchecked {};
  AffinePermutation(Unchecked, int n, std::vector<value_type> window)
      : n_(n), window_(std::move(window)) {}

  int n_;
  std::vector<value_type> window_;  // window_[i-1] = u(i), i = 1..n+1
};

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& u) const noexcept;
};

AffinePermutation compose(const AffinePermutation& u,
                          const AffinePermutation& v);
AffinePermutation invert(const AffinePermutation& u);

}  // namespace fcaff
