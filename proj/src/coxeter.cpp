#include "fcaff/coxeter.hpp"

#include <algorithm>
#include <unordered_set>

#include "fcaff/error.hpp"

namespace fcaff {

AffinePermutation to_permutation(const Word& w) {
  AffinePermutation u = AffinePermutation::identity(w.n);
  for (Letter s : w.letters) {
    u = u.times_generator(s);
  }
  return u;
}

std::vector<Letter> right_descents(const AffinePermutation& u) {
  std::vector<Letter> out;
  for (Letter s = 1; s <= u.rank() + 1; ++s) {
    if (u.has_right_descent(s)) {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Letter> left_descents(const AffinePermutation& u) {
  return right_descents(invert(u));
}

std::size_t length(const AffinePermutation& u) {
  std::size_t len = 0;
  AffinePermutation v = u;
  while (!v.is_identity()) {
    Letter s = 1;
    while (!v.has_right_descent(s)) {
      ++s;
    }
    v = v.times_generator(s);
    ++len;
  }
  return len;
}

bool is_reduced(const Word& w) {
  return length(to_permutation(w)) == w.size();
}

Word canonical_word(const AffinePermutation& u) {
  Word out = Word::identity(u.rank());
  AffinePermutation v = invert(u);
  // Left descents of u are right descents of u^{-1}; stripping s from the
  // left of u strips it from the right of u^{-1}.
  while (!v.is_identity()) {
    Letter s = 1;
    while (!v.has_right_descent(s)) {
      ++s;
    }
    out.letters.push_back(s);
    v = v.times_generator(s);
  }
  return out;
}

Word reduce(const Word& w) { return canonical_word(to_permutation(w)); }

Word coxeter_Rn(const Word& w) {
  int const n = w.n + 1;
  Word out = Word::identity(n);
  for (Letter s : w.letters) {
    if (s == affine_letter(w.n)) {
      out.letters.insert(out.letters.end(), {n, affine_letter(n), n});
    } else {
      out.letters.push_back(s);
    }
  }
  return out;
}

bool in_image_Rn(const AffinePermutation& u) {
  return u.window().back() == u.period();
}

AffinePermutation retract_Rn(const AffinePermutation& u) {
  int const n = u.rank();
  check_rank(n, 2);
  if (!in_image_Rn(u)) {
    throw Error("permutation " + u.to_string()
                + " is not in the image of R_n");
  }
  using value_type = AffinePermutation::value_type;
  value_type const m = n + 1;
  std::vector<value_type> w(static_cast<std::size_t>(n));
  for (value_type x = 1; x <= n; ++x) {
    value_type const v = u.window()[x - 1];
    value_type const r = ((v - 1) % m + m) % m + 1;
    value_type const q = (v - r) / m;
    // r == m would mean u maps x onto a multiple of n+1, impossible for a
    // bijection fixing those.
    w[x - 1] = r + q * n;
  }
  return AffinePermutation(n - 1, std::move(w));
}

std::vector<Element> enumerate_elements(int n, std::size_t max_len,
                                        std::size_t cap) {
  check_rank(n);
  std::vector<Element> all;
  std::unordered_set<AffinePermutation, AffinePermutationHash> seen;
  std::vector<AffinePermutation> layer{AffinePermutation::identity(n)};
  seen.insert(layer.front());
  for (std::size_t len = 0;; ++len) {
    for (const auto& u : layer) {
      all.push_back({u, canonical_word(u)});
    }
    if (len == max_len) {
      break;
    }
    std::vector<AffinePermutation> next;
    for (const auto& u : layer) {
      for (Letter s = 1; s <= n + 1; ++s) {
        if (u.has_right_descent(s)) {
          continue;
        }
        auto v = u.times_generator(s);
        if (seen.insert(v).second) {
          next.push_back(std::move(v));
          if (seen.size() > cap) {
            throw ResourceLimit("element enumeration exceeded cap of "
                                + std::to_string(cap));
          }
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Element& x, const Element& y) {
    if (x.word.size() != y.word.size()) {
      return x.word.size() < y.word.size();
    }
    return x.word.letters < y.word.letters;
  });
  return all;
}

}  // namespace fcaff
