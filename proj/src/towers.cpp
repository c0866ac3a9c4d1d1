#include "fcaff/towers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "fcaff/coxeter.hpp"
#include "fcaff/error.hpp"
#include "fcaff/fullcomm.hpp"

namespace fcaff {

namespace {

Word substitute(const Word& w, bool affine_first) {
  int const n = w.n + 1;
  Word out = Word::identity(n);
  for (Letter s : w.letters) {
    if (s == affine_letter(w.n)) {
      if (affine_first) {
        out.letters.insert(out.letters.end(), {affine_letter(n), n});
      } else {
        out.letters.insert(out.letters.end(), {n, affine_letter(n)});
      }
    } else {
      out.letters.push_back(s);
    }
  }
  return out;
}

void require_valid(const NormalForm& nf) {
  if (!validate_normal_form(nf).empty()) {
    throw Error("invalid normal form " + canonical_key(nf));
  }
}

// Installs the tail ⌈from,n⌉ w_r on `out`, as a Z tail starting at *out.j
// when out.k > 0 and as a falling-run form otherwise.
void set_shifted_tail(NormalForm& out, int from, const Word& w_r) {
  int const n = out.n;
  StembridgeForm f = stembridge_form(rising_word(n, from, n) * w_r);
  if (out.k == 0) {
    out.j.reset();
    out.tail = std::move(f);
    return;
  }
  ZTail z;
  for (std::size_t c = 0; c < f.runs.size(); ++c) {
    if (f.runs[c].l != *out.j + static_cast<int>(c)) {
      throw Error("shifted tail does not have the Z shape");
    }
    z.d.push_back(f.runs[c].g);
  }
  out.tail = std::move(z);
}

}  // namespace

Word substitute_I(const Word& w) { return substitute(w, false); }
Word substitute_J(const Word& w) { return substitute(w, true); }

NormalForm inject_I(const NormalForm& nf) {
  require_valid(nf);
  NormalForm out = nf;
  out.n = nf.n + 1;
  return out;
}

NormalForm inject_J(const NormalForm& nf) {
  require_valid(nf);
  if (nf.variant == NormalForm::Variant::A) {
    NormalForm out = nf;
    out.n = nf.n + 1;
    return out;
  }
  int const n = nf.n + 1;
  Word w_r = tail_word(nf);
  w_r.n = n;
  NormalForm out;
  out.n = n;
  out.variant = NormalForm::Variant::Affine;
  int const p = static_cast<int>(nf.p());
  if (p == 0) {
    int const j = *nf.j;
    out.pairs = {{j, n + 1}};
    out.k = nf.k - 1;
    out.j = j + 1;
    set_shifted_tail(out, j + 1, w_r);
    return out;
  }
  out.pairs.push_back({nf.pairs[0].i, n + 1});
  for (int t = 1; t < p; ++t) {
    out.pairs.push_back({nf.pairs[t].i, nf.pairs[t - 1].r});
  }
  int const rp = nf.pairs.back().r;
  if (nf.k == 0) {
    out.k = 0;
    set_shifted_tail(out, rp, w_r);
    return out;
  }
  int const j = *nf.j;
  if (j < rp - 1) {
    out.pairs.push_back({j, rp});
    out.k = nf.k - 1;
  } else {
    out.k = nf.k;
  }
  out.j = j + 1;
  set_shifted_tail(out, j + 1, w_r);
  return out;
}

nlohmann::json Report::to_json() const {
  return {{"checked", checked}, {"failures", failures}};
}

Report images_meet(int n_minus_1, std::size_t bound, unsigned jobs) {
  check_rank(n_minus_1, 2);
  auto const elements = enumerate_fc(n_minus_1, bound, jobs);
  struct Row {
    std::string source;
    std::string i_key;
    std::string j_key;
    bool finite = false;
    std::vector<std::string> failures;
  };
  std::vector<Row> rows(elements.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t x = begin; x < elements.size(); x += step) {
      const auto& e = elements[x];
      Row& row = rows[x];
      auto fail = [&](const std::string& what) {
        row.failures.push_back(format_word(e.word) + ": " + what);
      };
      try {
        NormalForm const nf = parse_normal_form(e.word);
        row.source = canonical_key(nf);
        row.finite = nf.variant == NormalForm::Variant::A;
        NormalForm const i_nf = inject_I(nf);
        NormalForm const j_nf = inject_J(nf);
        row.i_key = canonical_key(i_nf);
        row.j_key = canonical_key(j_nf);
        std::size_t const expected = e.length() + e.affine_length;
        for (auto const* img : {&i_nf, &j_nf}) {
          Word const word = emit_normal_form(*img);
          if (word.size() != expected) {
            fail("length of image is not l(w) + L(w)");
          }
          if (!is_reduced(word) || !is_fully_commutative(word)) {
            fail("image word is not reduced fully commutative");
          }
          if (count_letter(word, affine_letter(word.n)) != e.affine_length) {
            fail("affine length not preserved");
          }
        }
        if (parse_normal_form(substitute_I(e.word)) != i_nf) {
          fail("I disagrees with substitute-then-parse");
        }
        if (parse_normal_form(substitute_J(e.word)) != j_nf) {
          fail("J disagrees with substitute-then-parse");
        }
        if ((i_nf == j_nf) != row.finite) {
          fail("I(w) = J(w) does not match membership in W(A_{n-1})");
        }
      } catch (const Error& err) {
        fail(err.what());
      }
    }
  };
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back(work, t, jobs);
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  Report report;
  report.checked = elements.size();
  std::map<std::string, std::string> i_seen;
  std::map<std::string, std::string> j_seen;
  std::set<std::string> finite_images;
  for (auto& row : rows) {
    report.failures.insert(report.failures.end(), row.failures.begin(),
                           row.failures.end());
    if (row.source.empty()) {
      continue;
    }
    if (!i_seen.emplace(row.i_key, row.source).second) {
      report.failures.push_back("I not injective at " + row.i_key);
    }
    if (!j_seen.emplace(row.j_key, row.source).second) {
      report.failures.push_back("J not injective at " + row.j_key);
    }
    if (row.finite) {
      finite_images.insert(row.i_key);
    }
  }
  std::set<std::string> meet;
  for (const auto& [key, src] : i_seen) {
    if (j_seen.count(key) != 0) {
      meet.insert(key);
    }
  }
  if (meet != finite_images) {
    report.failures.push_back(
        "images of I and J do not meet exactly on W^c(A_{n-1})");
  }
  return report;
}

bool substitution_separates_braid_pair(int n) {
  check_rank(n, 3);
  int const a = affine_letter(n - 1);
  Word const x(n - 1, {n - 1, a, n - 1});
  Word const y(n - 1, {a, n - 1, a});
  if (to_permutation(x) != to_permutation(y)) {
    throw Error("braid pair is not a single element");
  }
  return to_permutation(substitute_I(x)) != to_permutation(substitute_I(y));
}

Word coxeter_element(int n) {
  check_rank(n, 2);
  return falling_word(n, n, 1) * Word(n, {affine_letter(n)});
}

namespace {

AffinePermutation tail_element(int n, int t, int s) {
  return to_permutation(coxeter_element(n).power(t) * falling_word(n, n, s));
}

AffinePermutation prefix_element(int n, int i) {
  return to_permutation(falling_word(n, i, 1) * Word(n, {affine_letter(n)}));
}

// x = c^t ⌊n,s⌋ satisfies x^{-1}(n+1) = s - (n+1)t, so a target value v
// determines (t, s) when v <= n+1.
std::optional<std::pair<int, int>> solve_tail(int n,
                                              AffinePermutation::value_type v) {
  AffinePermutation::value_type const m = n + 1;
  if (v > m) {
    return std::nullopt;
  }
  AffinePermutation::value_type const s = ((v - 1) % m + m) % m + 1;
  return std::pair<int, int>{static_cast<int>((s - v) / m),
                             static_cast<int>(s)};
}

}  // namespace

AffinePermutation assemble(int n, const CorollaryDecomposition& dec) {
  AffinePermutation u = compose(dec.d, tail_element(n, dec.t, dec.s));
  if (dec.prefix_i) {
    u = compose(prefix_element(n, *dec.prefix_i), u);
  }
  return u;
}

namespace {

std::optional<CorollaryDecomposition> attempt_form(
    const AffinePermutation& u, std::optional<int> prefix) {
  int const n = u.rank();
  AffinePermutation const rest =
      prefix ? compose(invert(prefix_element(n, *prefix)), u) : u;
  auto const ts = solve_tail(n, invert(rest)(n + 1));
  if (!ts) {
    return std::nullopt;
  }
  AffinePermutation const d =
      compose(rest, invert(tail_element(n, ts->first, ts->second)));
  if (!in_image_Rn(d)) {
    throw Error("internal: coset representative does not fix n+1");
  }
  return CorollaryDecomposition{prefix, d, ts->first, ts->second};
}

void require_fc_rank(const Word& w) {
  check_rank(w.n, 2);
  if (!is_fully_commutative(w)) {
    throw Error("'" + format_word(w) + "' is not fully commutative");
  }
}

}  // namespace

CorollaryDecomposition corollary_decompose(const Word& w) {
  require_fc_rank(w);
  int const n = w.n;
  NormalForm const nf = parse_normal_form(w);
  std::optional<int> prefix;
  if (!nf.pairs.empty() && nf.pairs.front().r == n + 1
      && nf.pairs.front().i < n) {
    prefix = nf.pairs.front().i;
  }
  if (auto dec = attempt_form(to_permutation(w), prefix)) {
    return *dec;
  }
  throw Error("no decomposition of the expected form for '" + format_word(w)
              + "'");
}

std::vector<CorollaryDecomposition> corollary_all_forms(const Word& w) {
  require_fc_rank(w);
  AffinePermutation const u = to_permutation(w);
  std::vector<CorollaryDecomposition> out;
  if (auto dec = attempt_form(u, std::nullopt)) {
    out.push_back(*dec);
  }
  for (int i = 0; i <= w.n - 1; ++i) {
    if (auto dec = attempt_form(u, i)) {
      out.push_back(*dec);
    }
  }
  return out;
}

nlohmann::json to_json(const CorollaryDecomposition& dec) {
  nlohmann::json j;
  j["prefix_i"] = dec.prefix_i ? nlohmann::json(*dec.prefix_i)
                               : nlohmann::json(nullptr);
  j["d"] = format_word(canonical_word(dec.d));
  j["d_window"] = dec.d.window();
  j["t"] = dec.t;
  j["s"] = dec.s;
  return j;
}

}  // namespace fcaff
