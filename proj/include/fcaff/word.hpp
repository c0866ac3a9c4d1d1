#pragma once

// Words over the generators of W(Ã_n) / B(Ã_n).
//
// A letter is an integer in 1..n+1: the value i <= n denotes sigma_i and the
// value n+1 denotes the affine generator a_{n+1}. Since the Dynkin diagram of
// Ã_n is a cycle, with this labelling letters i and j are joined in the
// diagram iff i - j = ±1 mod (n+1).
//
// One consequence of the labelling that the rest of the library relies on:
// the affine letter of rank n-1 is the integer n, which is sigma_n in rank n.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fcaff {

using Letter = int;

// Rank n >= 1; the group W(Ã_n) has n+1 generators.
void check_rank(int n, int min_rank = 1);

constexpr Letter affine_letter(int n) noexcept { return n + 1; }

bool is_valid_letter(int n, Letter s) noexcept;

// m_st = 2.
bool commute(int n, Letter s, Letter t) noexcept;

// m_st = 3. Never true for n = 1 (the two generators of Ã_1 have m = ∞).
bool braid_adjacent(int n, Letter s, Letter t) noexcept;

struct Word {
  int n = 1;
  std::vector<Letter> letters;

  Word() = default;
  Word(int rank, std::vector<Letter> ls);

  static Word identity(int rank) { return Word(rank, {}); }

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  Word operator*(const Word& other) const;  // concatenation, equal ranks
  Word power(int k) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// Token syntax: `s<i>` for sigma_i and `a` for a_{n+1}, separated by
// whitespace. The empty string is the identity.
Word parse_word(int n, std::string_view text);
std::string format_letter(int n, Letter s);
std::string format_word(const Word& w);

std::size_t count_letter(const Word& w, Letter s);

}  // namespace fcaff
