#include "fcaff/normal_form.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fcaff/coxeter.hpp"
#include "fcaff/error.hpp"
#include "fcaff/fullcomm.hpp"

namespace fcaff {

Word falling_word(int n, int i, int j) {
  Word w = Word::identity(n);
  for (int s = i; s >= j; --s) {
    w.letters.push_back(s);
  }
  return Word(n, std::move(w.letters));
}

Word rising_word(int n, int i, int j) {
  Word w = Word::identity(n);
  for (int s = i; s <= j; ++s) {
    w.letters.push_back(s);
  }
  return Word(n, std::move(w.letters));
}

bool is_valid_segment(int n, HSegment seg) noexcept {
  return 0 <= seg.i && seg.i < seg.r && seg.r <= n + 1
         && !(seg.i == 0 && seg.r == 1);
}

std::size_t segment_length(int n, HSegment seg) noexcept {
  return static_cast<std::size_t>(seg.i + (n + 1 - seg.r));
}

Word h_word(int n, HSegment seg) {
  if (!is_valid_segment(n, seg)) {
    throw Error("invalid segment h(" + std::to_string(seg.i) + ","
                + std::to_string(seg.r) + ") for rank " + std::to_string(n));
  }
  return falling_word(n, seg.i, 1) * rising_word(n, seg.r, n);
}

std::vector<std::string> validate_stembridge(int n,
                                             const StembridgeForm& f) {
  std::vector<std::string> out;
  const auto& rs = f.runs;
  for (std::size_t c = 0; c < rs.size(); ++c) {
    if (rs[c].l < 1 || rs[c].l > n || rs[c].g < 1 || rs[c].g > n) {
      out.emplace_back("1 <= l_c, g_c <= n");
    }
    if (rs[c].l < rs[c].g) {
      out.emplace_back("l_c >= g_c");
    }
    if (c > 0 && rs[c - 1].l >= rs[c].l) {
      out.emplace_back("l_1 < ... < l_t");
    }
    if (c > 0 && rs[c - 1].g >= rs[c].g) {
      out.emplace_back("g_1 < ... < g_t");
    }
  }
  return out;
}

Word emit_stembridge(int n, const StembridgeForm& f) {
  Word w = Word::identity(n);
  for (const auto& run : f.runs) {
    w = w * falling_word(n, run.l, run.g);
  }
  return w;
}

StembridgeForm stembridge_form(const AffinePermutation& u) {
  if (!u.is_finite_part()) {
    throw Error("element " + u.to_string()
                + " has positive affine length; no falling-run form");
  }
  int const n = u.rank();
  std::vector<AffinePermutation::value_type> w = u.window();
  std::vector<FallingRun> reversed;
  for (int l = n; l >= 1; --l) {
    int g = 1;
    while (w[g - 1] != l + 1) {
      ++g;
    }
    if (g == l + 1) {
      continue;
    }
    // w = w' · ⌊l,g⌋ with w' = w · sigma_g sigma_{g+1} ... sigma_l.
    for (int s = g; s <= l; ++s) {
      std::swap(w[s - 1], w[s]);
    }
    reversed.push_back({l, g});
  }
  StembridgeForm f{{reversed.rbegin(), reversed.rend()}};
  for (std::size_t c = 1; c < f.runs.size(); ++c) {
    if (f.runs[c - 1].g >= f.runs[c].g) {
      throw Error("element " + u.to_string()
                  + " of W(A_n) is not fully commutative");
    }
  }
  return f;
}

StembridgeForm stembridge_form(const Word& w) {
  return stembridge_form(to_permutation(w));
}

bool is_extremal(const Word& w) {
  auto const f = stembridge_form(w);
  bool has_first = false;
  bool has_last = false;
  for (const auto& run : f.runs) {
    has_first = has_first || run.g == 1;
    has_last = has_last || run.l == w.n;
  }
  return has_first && has_last;
}

NormalForm a_variant(int n, StembridgeForm form) {
  NormalForm nf;
  nf.n = n;
  nf.variant = NormalForm::Variant::A;
  nf.tail = std::move(form);
  return nf;
}

std::vector<std::string> validate_normal_form(const NormalForm& nf) {
  std::vector<std::string> out;
  int const n = nf.n;
  if (n < 2) {
    out.emplace_back("n >= 2");
    return out;
  }
  if (nf.variant == NormalForm::Variant::A) {
    if (!nf.pairs.empty() || nf.k != 0 || nf.j) {
      out.emplace_back("A variant carries no pairs, k or j");
    }
    if (!std::holds_alternative<StembridgeForm>(nf.tail)) {
      out.emplace_back("A variant tail is a falling-run form");
      return out;
    }
    auto v = validate_stembridge(n, std::get<StembridgeForm>(nf.tail));
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  int const p = static_cast<int>(nf.pairs.size());
  int const k = nf.k;
  if (k < 0) {
    out.emplace_back("k >= 0");
  }
  if (p + k < 1) {
    out.emplace_back("p + k >= 1");
  }
  if (p > (n + 1) / 2) {
    out.emplace_back("p <= floor((n+1)/2)");
  }
  if (p > 0) {
    bool chain = nf.pairs.front().i >= 0 && nf.pairs.front().r <= n + 1;
    for (int t = 1; t < p; ++t) {
      chain = chain && nf.pairs[t - 1].i < nf.pairs[t].i
              && nf.pairs[t].r < nf.pairs[t - 1].r;
    }
    chain = chain && nf.pairs.back().i < nf.pairs.back().r;
    if (!chain) {
      out.emplace_back("0 <= i_1 < ... < i_p < r_p < ... < r_1 <= n+1");
    }
    if (nf.pairs.back().r - nf.pairs.back().i < 2) {
      out.emplace_back("r_p - i_p >= 2");
    }
  }
  if (k > 0) {
    if (!nf.j || *nf.j < 1 || *nf.j > n) {
      out.emplace_back("1 <= j <= n when k > 0");
      return out;
    }
  } else if (nf.j) {
    out.emplace_back("j absent when k = 0");
  }
  if (p > 0 && k > 0) {
    int const j = *nf.j;
    int const ip = nf.pairs.back().i;
    int const rp = nf.pairs.back().r;
    if (!((ip < j && j + 1 < rp) || j + 1 == rp)) {
      out.emplace_back("i_p < j < j+1 < r_p or j+1 = r_p");
    }
  }
  if (k > 0) {
    if (!std::holds_alternative<ZTail>(nf.tail)) {
      out.emplace_back("tail kind Z when k > 0");
      return out;
    }
    int const j = *nf.j;
    const auto& d = std::get<ZTail>(nf.tail).d;
    int const z = static_cast<int>(d.size());
    if (j + z - 1 > n) {
      out.emplace_back("j + z - 1 <= n");
    }
    for (int c = 0; c < z; ++c) {
      if (d[c] < 1 || d[c] > n || (c > 0 && d[c - 1] >= d[c])) {
        out.emplace_back("1 <= d_1 < ... < d_z <= n");
        break;
      }
    }
    for (int c = 0; c < z; ++c) {
      if (j + c < d[c]) {
        out.emplace_back("j + c >= d_{c+1}");
        break;
      }
    }
  } else {
    if (!std::holds_alternative<StembridgeForm>(nf.tail)) {
      out.emplace_back("tail kind T when k = 0");
      return out;
    }
    const auto& f = std::get<StembridgeForm>(nf.tail);
    auto v = validate_stembridge(n, f);
    out.insert(out.end(), v.begin(), v.end());
    if (p > 0 && !f.runs.empty()) {
      int const ip = nf.pairs.back().i;
      int const rp = nf.pairs.back().r;
      if (!(ip < f.runs.front().l && f.runs.front().l < rp)) {
        out.emplace_back("i_p < l_1 < r_p");
      }
      for (std::size_t c = 1; c < f.runs.size(); ++c) {
        if (f.runs[c].l > f.runs[c - 1].l + 1 && f.runs[c].l >= rp) {
          out.emplace_back("l_i > l_{i-1} + 1 implies l_i < r_p");
          break;
        }
      }
    }
  }
  return out;
}

namespace {

void require_valid(const NormalForm& nf) {
  auto const v = validate_normal_form(nf);
  if (!v.empty()) {
    std::string msg = "invalid normal form:";
    for (const auto& s : v) {
      msg += " [" + s + "]";
    }
    throw Error(msg);
  }
}

// Positions of `letters` lying weakly below position q in the heap order.
std::vector<char> heap_ideal(int n, const std::vector<Letter>& letters,
                             std::size_t q) {
  std::vector<char> below(letters.size(), 0);
  std::vector<int> present(static_cast<std::size_t>(n + 2), 0);
  below[q] = 1;
  present[letters[q]] = 1;
  for (std::size_t p = q; p-- > 0;) {
    for (Letter x = 1; x <= n + 1; ++x) {
      if (present[x] && !commute(n, letters[p], x)) {
        below[p] = 1;
        present[letters[p]] = 1;
        break;
      }
    }
  }
  return below;
}

HSegment identify_segment(const Word& slice) {
  int const n = slice.n;
  auto const u = to_permutation(slice);
  for (int i = 0; i <= n; ++i) {
    for (int r = i + 1; r <= n + 1; ++r) {
      HSegment const seg{i, r};
      if (is_valid_segment(n, seg) && to_permutation(h_word(n, seg)) == u) {
        return seg;
      }
    }
  }
  throw Error("slice '" + format_word(slice)
              + "' is not of the form h(i,r); input is not fully commutative");
}

}  // namespace

NormalForm parse_normal_form(const Word& w) {
  int const n = w.n;
  check_rank(n, 2);
  Word const r = reduce(w);
  if (find_braid_factor(r)) {
    throw Error("'" + format_word(w) + "' is not fully commutative");
  }
  Letter const a = affine_letter(n);
  std::vector<std::size_t> a_pos;
  for (std::size_t q = 0; q < r.size(); ++q) {
    if (r.letters[q] == a) {
      a_pos.push_back(q);
    }
  }
  if (a_pos.empty()) {
    return a_variant(n, stembridge_form(r));
  }

  // Slice t holds the heap elements below the t-th a but not below the
  // previous one; the remainder is everything not below the last a.
  std::vector<HSegment> segments;
  std::vector<char> previous(r.size(), 0);
  for (std::size_t q : a_pos) {
    auto const below = heap_ideal(n, r.letters, q);
    Word slice = Word::identity(n);
    for (std::size_t x = 0; x < q; ++x) {
      if (below[x] && !previous[x]) {
        slice.letters.push_back(r.letters[x]);
      }
    }
    segments.push_back(identify_segment(slice));
    previous = below;
  }
  Word rest = Word::identity(n);
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (!previous[x]) {
      rest.letters.push_back(r.letters[x]);
    }
  }

  NormalForm nf;
  nf.n = n;
  nf.variant = NormalForm::Variant::Affine;
  std::size_t p = 0;
  while (p < segments.size() && segments[p].r - segments[p].i >= 2) {
    ++p;
  }
  nf.pairs.assign(segments.begin(), segments.begin() + p);
  nf.k = static_cast<int>(segments.size() - p);
  StembridgeForm tail = stembridge_form(rest);
  if (nf.k > 0) {
    int const j = segments[p].i;
    for (std::size_t t = p; t < segments.size(); ++t) {
      if (segments[t] != HSegment{j, j + 1}) {
        throw Error("'" + format_word(w)
                    + "' has an irregular periodic part; not fully "
                      "commutative");
      }
    }
    nf.j = j;
    ZTail z;
    for (std::size_t c = 0; c < tail.runs.size(); ++c) {
      if (tail.runs[c].l != j + static_cast<int>(c)) {
        throw Error("tail of '" + format_word(w)
                    + "' does not start at sigma_j with consecutive runs");
      }
      z.d.push_back(tail.runs[c].g);
    }
    nf.tail = std::move(z);
  } else {
    nf.tail = std::move(tail);
  }
  require_valid(nf);
  return nf;
}

Word emit_normal_form(const NormalForm& nf) {
  require_valid(nf);
  int const n = nf.n;
  if (nf.variant == NormalForm::Variant::A) {
    return emit_stembridge(n, std::get<StembridgeForm>(nf.tail));
  }
  Word const a(n, {affine_letter(n)});
  Word w = Word::identity(n);
  for (const auto& seg : nf.pairs) {
    w = w * h_word(n, seg) * a;
  }
  if (nf.k > 0) {
    int const j = *nf.j;
    w = w * (h_word(n, {j, j + 1}) * a).power(nf.k);
  }
  return w * tail_word(nf);
}

std::size_t emitted_length(const NormalForm& nf) {
  int const n = nf.n;
  std::size_t len = 0;
  for (const auto& seg : nf.pairs) {
    len += segment_length(n, seg) + 1;
  }
  len += static_cast<std::size_t>(nf.k) * static_cast<std::size_t>(n + 1);
  if (const auto* z = std::get_if<ZTail>(&nf.tail)) {
    for (std::size_t c = 0; c < z->d.size(); ++c) {
      len += static_cast<std::size_t>(*nf.j + static_cast<int>(c) - z->d[c]
                                      + 1);
    }
  } else {
    for (const auto& run : std::get<StembridgeForm>(nf.tail).runs) {
      len += static_cast<std::size_t>(run.l - run.g + 1);
    }
  }
  return len;
}

Word tail_word(const NormalForm& nf) {
  if (const auto* z = std::get_if<ZTail>(&nf.tail)) {
    Word w = Word::identity(nf.n);
    for (std::size_t c = 0; c < z->d.size(); ++c) {
      w = w * falling_word(nf.n, *nf.j + static_cast<int>(c), z->d[c]);
    }
    return w;
  }
  return emit_stembridge(nf.n, std::get<StembridgeForm>(nf.tail));
}

namespace {

std::size_t stembridge_length(const StembridgeForm& f) {
  std::size_t len = 0;
  for (const auto& run : f.runs) {
    len += static_cast<std::size_t>(run.l - run.g + 1);
  }
  return len;
}

// All falling-run forms over A_n (valid ones only).
std::vector<StembridgeForm> all_stembridge_forms(int n) {
  std::vector<StembridgeForm> out;
  StembridgeForm cur;
  std::function<void(int, int)> rec = [&](int min_l, int min_g) {
    out.push_back(cur);
    for (int l = min_l; l <= n; ++l) {
      for (int g = min_g; g <= l; ++g) {
        cur.runs.push_back({l, g});
        rec(l + 1, g + 1);
        cur.runs.pop_back();
      }
    }
  };
  rec(1, 1);
  return out;
}

}  // namespace

std::vector<NormalForm> enumerate_normal_forms(int n,
                                               std::size_t max_total_len) {
  check_rank(n, 2);
  std::vector<NormalForm> out;
  auto const finite = all_stembridge_forms(n);
  for (const auto& f : finite) {
    if (stembridge_length(f) <= max_total_len) {
      out.push_back(a_variant(n, f));
    }
  }

  auto consider = [&](NormalForm nf) {
    if (validate_normal_form(nf).empty()
        && emitted_length(nf) <= max_total_len) {
      out.push_back(std::move(nf));
    }
  };

  // Z tails for a given j: d strictly increasing in 1..n with d_{c+1} <= j+c
  // and j+z-1 <= n.
  auto z_tails = [n](int j) {
    std::vector<ZTail> tails;
    ZTail cur;
    std::function<void(int)> rec = [&](int min_d) {
      tails.push_back(cur);
      int const c = static_cast<int>(cur.d.size());
      if (j + c > n) {
        return;
      }
      for (int d = min_d; d <= std::min(n, j + c); ++d) {
        cur.d.push_back(d);
        rec(d + 1);
        cur.d.pop_back();
      }
    };
    rec(1);
    return tails;
  };

  std::vector<HSegment> chain;
  std::function<void(std::size_t)> with_chain = [&](std::size_t prefix_len) {
    for (int k = 0;
         prefix_len + static_cast<std::size_t>(k) * (n + 1) <= max_total_len;
         ++k) {
      if (chain.empty() && k == 0) {
        continue;
      }
      NormalForm nf;
      nf.n = n;
      nf.variant = NormalForm::Variant::Affine;
      nf.pairs = chain;
      nf.k = k;
      if (k == 0) {
        for (const auto& f : finite) {
          nf.tail = f;
          consider(nf);
        }
      } else {
        for (int j = 1; j <= n; ++j) {
          nf.j = j;
          for (auto& z : z_tails(j)) {
            nf.tail = std::move(z);
            consider(nf);
          }
        }
      }
    }
  };
  // Chains 0 <= i_1 < ... < i_p < r_p < ... < r_1 <= n+1, grown inwards.
  std::function<void(int, int, std::size_t)> grow = [&](int min_i, int max_r,
                                                         std::size_t len) {
    for (int i = min_i; i <= n; ++i) {
      for (int r = i + 1; r <= max_r; ++r) {
        HSegment const seg{i, r};
        if (!is_valid_segment(n, seg)) {
          continue;
        }
        std::size_t const l2 = len + segment_length(n, seg) + 1;
        if (l2 > max_total_len) {
          continue;
        }
        chain.push_back(seg);
        if (r - i >= 2) {
          with_chain(l2);
        }
        grow(i + 1, r - 1, l2);
        chain.pop_back();
      }
    }
  };
  with_chain(0);
  grow(0, n + 1, 0);

  std::vector<std::pair<Word, NormalForm>> keyed;
  keyed.reserve(out.size());
  for (auto& nf : out) {
    keyed.emplace_back(emit_normal_form(nf), std::move(nf));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) {
      return x.first.size() < y.first.size();
    }
    return x.first.letters < y.first.letters;
  });
  out.clear();
  for (auto& [w, nf] : keyed) {
    out.push_back(std::move(nf));
  }
  return out;
}

nlohmann::json to_json(const NormalForm& nf) {
  using nlohmann::json;
  json j;
  j["n"] = nf.n;
  j["variant"] = nf.variant == NormalForm::Variant::A ? "A" : "Affine";
  json pairs = json::array();
  for (const auto& seg : nf.pairs) {
    pairs.push_back({seg.i, seg.r});
  }
  j["pairs"] = pairs;
  j["k"] = nf.k;
  j["j"] = nf.j ? json(*nf.j) : json(nullptr);
  if (const auto* z = std::get_if<ZTail>(&nf.tail)) {
    j["tail"] = {{"kind", "Z"}, {"z", z->d.size()}, {"d", z->d}};
  } else {
    json runs = json::array();
    for (const auto& run : std::get<StembridgeForm>(nf.tail).runs) {
      runs.push_back({run.l, run.g});
    }
    j["tail"] = {{"kind", "T"}, {"pairs", runs}};
  }
  return j;
}

NormalForm normal_form_from_json(const nlohmann::json& j) {
  try {
    NormalForm nf;
    nf.n = j.at("n").get<int>();
    auto const variant = j.at("variant").get<std::string>();
    if (variant == "A") {
      nf.variant = NormalForm::Variant::A;
    } else if (variant == "Affine") {
      nf.variant = NormalForm::Variant::Affine;
    } else {
      throw Error("unknown variant '" + variant + "'");
    }
    for (const auto& pr : j.value("pairs", nlohmann::json::array())) {
      nf.pairs.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
    }
    nf.k = j.value("k", 0);
    if (j.contains("j") && !j.at("j").is_null()) {
      nf.j = j.at("j").get<int>();
    }
    const auto& tail = j.at("tail");
    auto const kind = tail.at("kind").get<std::string>();
    if (kind == "Z") {
      ZTail z{tail.at("d").get<std::vector<int>>()};
      if (tail.contains("z") && tail.at("z").get<std::size_t>() != z.d.size()) {
        throw Error("Z tail: z does not match the length of d");
      }
      nf.tail = std::move(z);
    } else if (kind == "T") {
      StembridgeForm f;
      for (const auto& pr : tail.at("pairs")) {
        f.runs.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
      }
      nf.tail = std::move(f);
    } else {
      throw Error("unknown tail kind '" + kind + "'");
    }
    return nf;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed normal-form JSON: ") + e.what());
  }
}

std::string canonical_key(const NormalForm& nf) { return to_json(nf).dump(); }

}  // namespace fcaff
