#include "fcaff/braid.hpp"

#include <cctype>
#include <deque>
#include <set>

#include "fcaff/error.hpp"
#include "fcaff/fullcomm.hpp"
#include "fcaff/normal_form.hpp"

namespace fcaff {

AffineBraidWord::AffineBraidWord(int rank, std::vector<BraidLetter> ls)
    : n(rank), letters(std::move(ls)) {
  check_rank(n);
  for (const auto& x : letters) {
    if (!is_valid_letter(n, x.letter) || (x.sign != 1 && x.sign != -1)) {
      throw Error("braid letter " + std::to_string(x.sign * x.letter)
                  + " is not valid for rank " + std::to_string(n));
    }
  }
}

bool AffineBraidWord::is_positive() const noexcept {
  for (const auto& x : letters) {
    if (x.sign < 0) {
      return false;
    }
  }
  return true;
}

AffineBraidWord AffineBraidWord::inverse() const {
  AffineBraidWord out = *this;
  std::reverse(out.letters.begin(), out.letters.end());
  for (auto& x : out.letters) {
    x.sign = -x.sign;
  }
  return out;
}

AffineBraidWord AffineBraidWord::operator*(const AffineBraidWord& other) const {
  if (n != other.n) {
    throw Error("rank mismatch in braid word product");
  }
  AffineBraidWord out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(),
                     other.letters.end());
  return out;
}

AffineBraidWord AffineBraidWord::power(int k) const {
  AffineBraidWord base = k < 0 ? inverse() : *this;
  AffineBraidWord out = identity(n);
  for (int i = 0; i < std::abs(k); ++i) {
    out = out * base;
  }
  return out;
}

AffineBraidWord positive_lift(const Word& w) {
  AffineBraidWord out = AffineBraidWord::identity(w.n);
  for (Letter s : w.letters) {
    out.letters.push_back({s, 1});
  }
  return out;
}

AffineBraidWord parse_braid_word(int n, std::string_view text) {
  // Blank out the inverse markers so that word offsets stay aligned.
  std::string plain(text);
  std::vector<int> signs;
  bool at_token_start = true;
  for (std::size_t i = 0; i < plain.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(plain[i]))) {
      at_token_start = true;
      continue;
    }
    if (!at_token_start) {
      if (plain[i] == '!') {
        throw ParseError("misplaced '!'", i);
      }
      continue;
    }
    at_token_start = false;
    if (plain[i] == '!') {
      if (i + 1 >= plain.size()
          || std::isspace(static_cast<unsigned char>(plain[i + 1]))) {
        throw ParseError("'!' must be followed by a generator", i);
      }
      plain[i] = ' ';
      signs.push_back(-1);
    } else {
      signs.push_back(1);
    }
  }
  Word const w = parse_word(n, plain);
  AffineBraidWord out = AffineBraidWord::identity(n);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    out.letters.push_back({w.letters[i], signs[i]});
  }
  return out;
}

std::string format_braid_word(const AffineBraidWord& w) {
  std::string out;
  for (const auto& x : w.letters) {
    if (!out.empty()) {
      out += ' ';
    }
    if (x.sign < 0) {
      out += '!';
    }
    out += format_letter(w.n, x.letter);
  }
  return out;
}

SignedBraidWord embed_to_artin(const AffineBraidWord& w) {
  int const n = w.n;
  SignedBraidWord tau(n + 2, {{1, 1}});
  for (int i = 1; i <= n + 1; ++i) {
    tau.letters.push_back({i, 1});
  }
  SignedBraidWord const tau_inv = tau.inverse();
  SignedBraidWord out(n + 2, {});
  for (const auto& x : w.letters) {
    if (x.letter == affine_letter(n)) {
      out = out * tau;
      out.letters.push_back({n + 1, x.sign});
      out = out * tau_inv;
    } else {
      out.letters.push_back({x.letter + 1, x.sign});
    }
  }
  return out;
}

bool braid_equal(const AffineBraidWord& x, const AffineBraidWord& y) {
  if (x.n != y.n) {
    throw Error("rank mismatch in braid comparison");
  }
  return garside_normal_form(embed_to_artin(x))
         == garside_normal_form(embed_to_artin(y));
}

bool positive_class_equal(const AffineBraidWord& x, const AffineBraidWord& y,
                          std::size_t cap) {
  if (x.n != y.n) {
    throw Error("rank mismatch in braid comparison");
  }
  if (!x.is_positive() || !y.is_positive()) {
    throw Error("positive_class_equal needs positive words");
  }
  if (x.letters.size() != y.letters.size()) {
    return false;
  }
  int const n = x.n;
  auto plain = [](const AffineBraidWord& w) {
    std::vector<Letter> v;
    for (const auto& l : w.letters) {
      v.push_back(l.letter);
    }
    return v;
  };
  auto const target = plain(y);
  std::set<std::vector<Letter>> seen{plain(x)};
  std::deque<std::vector<Letter>> queue{plain(x)};
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    if (v == target) {
      return true;
    }
    auto push = [&](std::vector<Letter>&& u) {
      if (seen.insert(u).second) {
        if (seen.size() > cap) {
          throw ResourceLimit("positive braid class exceeded cap of "
                              + std::to_string(cap) + " words");
        }
        queue.push_back(std::move(u));
      }
    };
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (commute(n, v[i], v[i + 1])) {
        auto u = v;
        std::swap(u[i], u[i + 1]);
        push(std::move(u));
      }
      if (i + 2 < v.size() && v[i] == v[i + 2]
          && braid_adjacent(n, v[i], v[i + 1])) {
        auto u = v;
        u[i] = u[i + 2] = v[i + 1];
        u[i + 1] = v[i];
        push(std::move(u));
      }
    }
  }
  return false;
}

AffineBraidWord c_word(int n) {
  check_rank(n, 2);
  return positive_lift(falling_word(n, n, 1) * Word(n, {affine_letter(n)}));
}

AffineBraidWord psi(const AffineBraidWord& w, int times) {
  int const size = w.n + 1;
  int const shift = ((times % size) + size) % size;
  AffineBraidWord out = w;
  for (auto& x : out.letters) {
    x.letter = (x.letter - 1 - shift + size) % size + 1;
  }
  return out;
}

AffineBraidWord flatten(const AffineBraidWord& w) {
  int const n = w.n + 1;
  AffineBraidWord out = AffineBraidWord::identity(n);
  for (const auto& x : w.letters) {
    if (x.letter == affine_letter(w.n)) {
      out.letters.insert(out.letters.end(),
                         {{n, 1}, {affine_letter(n), x.sign}, {n, -1}});
    } else {
      out.letters.push_back(x);
    }
  }
  out.n = n;
  return out;
}

namespace {

// h_{n-1}(j, j+1) a_n as a formal word of rank n-1.
AffineBraidWord formal_y(int n, int j) {
  return positive_lift(h_word(n - 1, {j, j + 1}) * Word(n - 1, {n}));
}

AffineBraidWord formal_rising(int n, int from) {
  return positive_lift(rising_word(n - 1, from, n - 1));
}

// ∏_{i=first}^{first+count-1} ψ^i[Y^{n-j} ⌈j,n-1⌉].
AffineBraidWord rotated_blocks(int n, int j, int first, int count) {
  AffineBraidWord const block =
      formal_y(n, j).power(n - j) * formal_rising(n, j);
  AffineBraidWord out = AffineBraidWord::identity(n - 1);
  for (int i = first; i < first + count; ++i) {
    out = out * psi(block, i);
  }
  return out;
}

}  // namespace

Lemma31Sides lemma31_sides(int n, int j, int k) {
  check_rank(n, 2);
  if (j < 1 || j > n || k < 1) {
    throw Error("powers of the affine core need 1 <= j <= n and k >= 1");
  }
  Lemma31Sides out;
  out.lhs = positive_lift((h_word(n, {j, j + 1}) * Word(n, {affine_letter(n)}))
                              .power(k));
  if (j == n) {
    out.u = AffineBraidWord::identity(n - 1);
    out.t = k;
    out.v = Word::identity(n);
    out.case_label = 'n';
    return out;
  }
  int const period = n - j + 1;
  int const m = k / period;
  int const r = k % period;
  out.u = rotated_blocks(n, j, 0, m) * psi(formal_y(n, j).power(r), m);
  out.t = m;
  out.v = falling_word(n, n, n + 1 - r);
  out.case_label = m == 0 ? '0' : 'm';
  return out;
}

bool verify_lemma31(int n, int j, int k) {
  auto const sides = lemma31_sides(n, j, k);
  return braid_equal(sides.lhs, flatten(sides.u) * c_word(n).power(sides.t)
                                    * positive_lift(sides.v));
}

AffineBraidWord assemble(int n, const BraidDecomposition& dec) {
  AffineBraidWord out = AffineBraidWord::identity(n);
  if (dec.prefix_i) {
    out = positive_lift(falling_word(n, *dec.prefix_i, 1)
                        * Word(n, {affine_letter(n)}));
  }
  return out * flatten(dec.u) * c_word(n).power(dec.t) * positive_lift(dec.v);
}

namespace {

// The first form for h(i_1,r_1) a ... h(i_p,r_p) a (h(j,j+1) a)^k w_r with
// r_1 <= n, or p = 0.
BraidDecomposition first_form(int n, const std::vector<HSegment>& pairs, int k,
                              std::optional<int> j, const Word& w_r) {
  BraidDecomposition out;
  out.u = AffineBraidWord::identity(n - 1);
  out.v = w_r;
  int const p = static_cast<int>(pairs.size());
  if (p == 0) {
    if (k > 0) {
      auto const sides = lemma31_sides(n, *j, k);
      out.u = sides.u;
      out.t = sides.t;
      out.v = sides.v * w_r;
    }
    return out;
  }
  AffineBraidWord rho = AffineBraidWord::identity(n - 1);
  for (const auto& seg : pairs) {
    rho = rho * positive_lift(h_word(n - 1, seg) * Word(n - 1, {n}));
  }
  int const eps = n - p + 1;
  if (k == 0) {
    out.u = rho;
    out.v = falling_word(n, n, eps) * w_r;
    return out;
  }
  int const jj = *j;
  AffineBraidWord const y = formal_y(n, jj);
  if (k <= eps - (jj + 1)) {
    out.u = rho * y.power(k);
    out.v = falling_word(n, n, n + 1 - k) * falling_word(n, n - k, eps - k)
            * w_r;
    return out;
  }
  int const h = k - (eps - jj - 1);
  AffineBraidWord const eta =
      rho * y.power(eps - jj - 1) * formal_rising(n, jj);
  if (h - 1 <= n - jj) {
    out.u = eta * psi(y.power(h - 1), 1);
    out.t = 1;
    out.v = falling_word(n, n, n + 2 - h) * w_r;
    return out;
  }
  int const period = n - jj + 1;
  int const m = (h - 1) / period;
  int const r = (h - 1) % period;
  out.u = eta * rotated_blocks(n, jj, 1, m) * psi(y.power(r), m + 1);
  out.t = m + 1;
  out.v = falling_word(n, n, n + 1 - r) * w_r;
  return out;
}

}  // namespace

BraidDecomposition decompose_fc_braid(const Word& w) {
  int const n = w.n;
  check_rank(n, 2);
  if (!is_fully_commutative(w)) {
    throw Error("'" + format_word(w) + "' is not fully commutative");
  }
  NormalForm const nf = parse_normal_form(w);
  BraidDecomposition dec;
  Word const w_r = tail_word(nf);
  if (nf.variant == NormalForm::Variant::A) {
    dec.u = AffineBraidWord::identity(n - 1);
    dec.v = w_r;
  } else if (!nf.pairs.empty() && nf.pairs.front().r == n + 1) {
    std::vector<HSegment> const rest(nf.pairs.begin() + 1, nf.pairs.end());
    dec = first_form(n, rest, nf.k, nf.j, w_r);
    dec.prefix_i = nf.pairs.front().i;
  } else {
    dec = first_form(n, nf.pairs, nf.k, nf.j, w_r);
  }
  if (!braid_equal(positive_lift(emit_normal_form(nf)), assemble(n, dec))) {
    throw Error("decomposition of '" + format_word(w)
                + "' failed braid certification");
  }
  return dec;
}

nlohmann::json to_json(const BraidDecomposition& dec) {
  nlohmann::json j;
  j["prefix_i"] = dec.prefix_i ? nlohmann::json(*dec.prefix_i)
                               : nlohmann::json(nullptr);
  j["u"] = format_braid_word(dec.u);
  j["t"] = dec.t;
  j["v"] = format_word(dec.v);
  return j;
}

}  // namespace fcaff
