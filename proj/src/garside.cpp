#include "fcaff/garside.hpp"

#include <algorithm>
#include <numeric>

#include "fcaff/error.hpp"

namespace fcaff {

SignedBraidWord::SignedBraidWord(int m, std::vector<ArtinLetter> ls)
    : strands(m), letters(std::move(ls)) {
  if (strands < 2) {
    throw Error("a braid group needs at least 2 strands");
  }
  for (const auto& x : letters) {
    if (x.index < 1 || x.index >= strands || (x.sign != 1 && x.sign != -1)) {
      throw Error("Artin letter " + std::to_string(x.sign * x.index)
                  + " is out of range for " + std::to_string(strands)
                  + " strands");
    }
  }
}

SignedBraidWord SignedBraidWord::inverse() const {
  SignedBraidWord out = *this;
  std::reverse(out.letters.begin(), out.letters.end());
  for (auto& x : out.letters) {
    x.sign = -x.sign;
  }
  return out;
}

SignedBraidWord SignedBraidWord::operator*(const SignedBraidWord& other) const {
  if (strands != other.strands) {
    throw Error("strand count mismatch in braid product");
  }
  SignedBraidWord out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(),
                     other.letters.end());
  return out;
}

SignedBraidWord free_reduce(const SignedBraidWord& w) {
  SignedBraidWord out;
  out.strands = w.strands;
  for (const auto& x : w.letters) {
    if (!out.letters.empty() && out.letters.back().index == x.index
        && out.letters.back().sign == -x.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(x);
    }
  }
  return out;
}

std::string format_artin(const SignedBraidWord& w) {
  std::string out;
  for (const auto& x : w.letters) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(x.sign * x.index);
  }
  return out;
}

namespace {

Permutation identity_perm(int m) {
  Permutation p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation half_twist(int m) {
  Permutation p(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    p[x] = m - 1 - x;
  }
  return p;
}

// Generator s_i swaps 0-based points i-1 and i.
bool right_descent(const Permutation& p, int i) { return p[i - 1] > p[i]; }

bool left_descent(const Permutation& p, int i) {
  auto const a = std::find(p.begin(), p.end(), i - 1) - p.begin();
  auto const b = std::find(p.begin(), p.end(), i) - p.begin();
  return a > b;
}

void times_generator(Permutation& p, int i) { std::swap(p[i - 1], p[i]); }

void generator_times(Permutation& p, int i) {
  for (int& v : p) {
    if (v == i - 1) {
      v = i;
    } else if (v == i) {
      v = i - 1;
    }
  }
}

// Δ^{-1} π Δ, which for permutation braids is w0 ∘ π ∘ w0.
Permutation flip(const Permutation& p) {
  int const m = static_cast<int>(p.size());
  Permutation q(p.size());
  for (int x = 0; x < m; ++x) {
    q[x] = m - 1 - p[m - 1 - x];
  }
  return q;
}

// Moves left descents of b into a until the pair is left-weighted. Returns
// whether anything changed.
bool normalize_pair(Permutation& a, Permutation& b) {
  int const m = static_cast<int>(a.size());
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 1; i < m; ++i) {
      if (left_descent(b, i) && !right_descent(a, i)) {
        times_generator(a, i);
        generator_times(b, i);
        again = changed = true;
      }
    }
  }
  return changed;
}

std::vector<int> reduced_word(Permutation p) {
  std::vector<int> rev;
  int const m = static_cast<int>(p.size());
  for (bool again = true; again;) {
    again = false;
    for (int i = 1; i < m; ++i) {
      if (right_descent(p, i)) {
        times_generator(p, i);
        rev.push_back(i);
        again = true;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace

bool is_left_weighted(const Permutation& a, const Permutation& b) {
  for (int i = 1; i < static_cast<int>(a.size()); ++i) {
    if (left_descent(b, i) && !right_descent(a, i)) {
      return false;
    }
  }
  return true;
}

GarsideNormalForm garside_normal_form(const SignedBraidWord& input) {
  SignedBraidWord const w = free_reduce(input);
  int const m = w.strands;
  GarsideNormalForm nf;
  nf.strands = m;
  // b_i^{-1} = Δ^{-1} X with X = Δ b_i^{-1}, the permutation w0 ∘ s_i.
  // Pulling Δ^{-1} to the front conjugates every earlier factor by Δ.
  std::vector<Permutation> factors;
  Permutation const w0 = half_twist(m);
  for (const auto& x : w.letters) {
    Permutation p = identity_perm(m);
    if (x.sign > 0) {
      times_generator(p, x.index);
    } else {
      p = w0;
      times_generator(p, x.index);
      for (auto& f : factors) {
        f = flip(f);
      }
      --nf.infimum;
    }
    factors.push_back(std::move(p));
  }
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      again = normalize_pair(factors[i], factors[i + 1]) || again;
    }
  }
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == w0) {
    ++lead;
  }
  nf.infimum += static_cast<int>(lead);
  Permutation const e = identity_perm(m);
  while (factors.size() > lead && factors.back() == e) {
    factors.pop_back();
  }
  nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(lead),
                    factors.end());
  return nf;
}

SignedBraidWord normal_form_word(const GarsideNormalForm& nf) {
  int const m = nf.strands;
  SignedBraidWord delta(m, {});
  for (int i : reduced_word(half_twist(m))) {
    delta.letters.push_back({i, 1});
  }
  SignedBraidWord out(m, {});
  for (int c = 0; c < std::abs(nf.infimum); ++c) {
    out = out * (nf.infimum > 0 ? delta : delta.inverse());
  }
  for (const auto& f : nf.factors) {
    for (int i : reduced_word(f)) {
      out.letters.push_back({i, 1});
    }
  }
  return out;
}

nlohmann::json to_json(const GarsideNormalForm& nf) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : nf.factors) {
    std::vector<int> images;
    for (int v : f) {
      images.push_back(v + 1);
    }
    factors.push_back(images);
  }
  return {{"strands", nf.strands},
          {"infimum", nf.infimum},
          {"factors", factors}};
}

}  // namespace fcaff
