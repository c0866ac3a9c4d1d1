#include "fcaff/word.hpp"

#include <algorithm>
#include <cctype>

#include "fcaff/error.hpp"

namespace fcaff {

void check_rank(int n, int min_rank) {
  if (n < min_rank) {
    throw Error("rank n = " + std::to_string(n) + " is below the minimum "
                + std::to_string(min_rank));
  }
}

bool is_valid_letter(int n, Letter s) noexcept {
  return s >= 1 && s <= n + 1;
}

bool commute(int n, Letter s, Letter t) noexcept {
  if (s == t) {
    return false;
  }
  if (n == 1) {
    return false;
  }
  return !braid_adjacent(n, s, t);
}

bool braid_adjacent(int n, Letter s, Letter t) noexcept {
  if (n < 2 || s == t) {
    return false;
  }
  int const m = n + 1;
  int const d = ((s - t) % m + m) % m;
  return d == 1 || d == m - 1;
}

Word::Word(int rank, std::vector<Letter> ls) : n(rank), letters(std::move(ls)) {
  check_rank(n);
  for (Letter s : letters) {
    if (!is_valid_letter(n, s)) {
      throw Error("letter " + std::to_string(s) + " is not a generator of rank "
                  + std::to_string(n));
    }
  }
}

Word Word::operator*(const Word& other) const {
  if (n != other.n) {
    throw Error("rank mismatch in word concatenation");
  }
  Word result = *this;
  result.letters.insert(result.letters.end(), other.letters.begin(),
                        other.letters.end());
  return result;
}

Word Word::power(int k) const {
  if (k < 0) {
    throw Error("negative power of a Coxeter word");
  }
  Word result = Word::identity(n);
  for (int i = 0; i < k; ++i) {
    result.letters.insert(result.letters.end(), letters.begin(), letters.end());
  }
  return result;
}

Word parse_word(int n, std::string_view text) {
  check_rank(n);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t const start = pos;
    while (pos < text.size()
           && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    std::string_view tok = text.substr(start, pos - start);
    if (tok == "a") {
      letters.push_back(affine_letter(n));
      continue;
    }
    if (tok.size() < 2 || tok[0] != 's') {
      throw ParseError("unknown token '" + std::string(tok) + "'", start);
    }
    int index = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])) || index > 100000) {
        throw ParseError("bad generator index in '" + std::string(tok) + "'",
                         start + i);
      }
      index = index * 10 + (tok[i] - '0');
    }
    if (index < 1 || index > n) {
      throw ParseError("generator '" + std::string(tok)
                           + "' out of range for rank " + std::to_string(n),
                       start);
    }
    letters.push_back(index);
  }
  return Word(n, std::move(letters));
}

std::string format_letter(int n, Letter s) {
  return s == affine_letter(n) ? std::string("a") : "s" + std::to_string(s);
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += format_letter(w.n, w.letters[i]);
  }
  return out;
}

std::size_t count_letter(const Word& w, Letter s) {
  return static_cast<std::size_t>(
      std::count(w.letters.begin(), w.letters.end(), s));
}

}  // namespace fcaff
