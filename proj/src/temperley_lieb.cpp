#include "fcaff/temperley_lieb.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>

#include "fcaff/coxeter.hpp"
#include "fcaff/error.hpp"
#include "fcaff/fullcomm.hpp"
#include "fcaff/normal_form.hpp"
#include "fcaff/towers.hpp"

namespace fcaff {

namespace {

using Terms = std::map<AffinePermutation, LaurentPolynomial>;

void add_into(Terms& acc, const AffinePermutation& w,
              const LaurentPolynomial& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      acc.erase(it);
    }
  }
}

struct ProductKey {
  AffinePermutation w;
  Letter s;
  bool left;

  friend bool operator==(const ProductKey&, const ProductKey&) = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const noexcept {
    return AffinePermutationHash{}(k.w) * 131 + static_cast<std::size_t>(k.s) * 2
           + (k.left ? 1 : 0);
  }
};

// Memo tables shared by every computation in the process.
class Cache {
 public:
  static Cache& instance() {
    static Cache cache;
    return cache;
  }

  bool is_fc(const AffinePermutation& w) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = fc_.find(w); it != fc_.end()) {
        return it->second;
      }
    }
    bool const value = is_fully_commutative(w);
    std::lock_guard lock(mutex_);
    fc_.emplace(w, value);
    return value;
  }

  std::optional<Terms> product(const ProductKey& key) {
    std::lock_guard lock(mutex_);
    if (auto it = products_.find(key); it != products_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  void store(const ProductKey& key, const Terms& value) {
    std::lock_guard lock(mutex_);
    products_.emplace(key, value);
  }

  std::optional<std::string> key(const AffinePermutation& w) {
    std::lock_guard lock(mutex_);
    if (auto it = keys_.find(w); it != keys_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  void store_key(const AffinePermutation& w, const std::string& k) {
    std::lock_guard lock(mutex_);
    keys_.emplace(w, k);
  }

 private:
  std::mutex mutex_;
  std::unordered_map<AffinePermutation, bool, AffinePermutationHash> fc_;
  std::unordered_map<ProductKey, Terms, ProductKeyHash> products_;
  std::unordered_map<AffinePermutation, std::string, AffinePermutationHash>
      keys_;
};

LaurentPolynomial q_minus_one() { return LaurentPolynomial::q() - 1; }

Terms basis_product(const AffinePermutation& w, Letter s, bool left);

Terms right_fold(Terms acc, const Word& w) {
  for (Letter s : w.letters) {
    Terms next;
    for (const auto& [v, c] : acc) {
      for (const auto& [x, d] : basis_product(v, s, false)) {
        add_into(next, x, c * d);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

Terms evaluate_word(const Word& w) {
  return right_fold({{AffinePermutation::identity(w.n), 1}}, w);
}

// g_w g_s (left = false) or g_s g_w (left = true) for FC w.
Terms compute_basis_product(const AffinePermutation& w, Letter s, bool left) {
  int const n = w.rank();
  bool const descent = left ? w.has_left_descent(s) : w.has_right_descent(s);
  AffinePermutation const v = left ? w.generator_times(s) : w.times_generator(s);
  if (descent) {
    Terms out;
    add_into(out, w, q_minus_one());
    add_into(out, v, LaurentPolynomial::q());
    return out;
  }
  if (Cache::instance().is_fc(v)) {
    return {{v, 1}};
  }
  Word word = canonical_word(w);
  if (left) {
    word.letters.insert(word.letters.begin(), s);
  } else {
    word.letters.push_back(s);
  }
  auto const witness = find_braid_factor(word);
  if (!witness) {
    throw Error("internal: non-FC product without a braid factor");
  }
  const auto& m = witness->member.letters;
  std::size_t const p = witness->position;
  Letter const x = m[p];
  Letter const y = m[p + 1];
  Word const before(n, {m.begin(), m.begin() + static_cast<std::ptrdiff_t>(p)});
  Word const after(n, {m.begin() + static_cast<std::ptrdiff_t>(p + 3), m.end()});
  Terms out;
  std::vector<std::vector<Letter>> const middles{{x, y}, {y, x}, {x}, {y}, {}};
  for (const auto& mid : middles) {
    Word const shorter = before * Word(n, mid) * after;
    for (const auto& [u, c] : evaluate_word(shorter)) {
      add_into(out, u, -c);
    }
  }
  return out;
}

Terms basis_product(const AffinePermutation& w, Letter s, bool left) {
  ProductKey const key{w, s, left};
  if (auto hit = Cache::instance().product(key)) {
    return *hit;
  }
  Terms value = compute_basis_product(w, s, left);
  Cache::instance().store(key, value);
  return value;
}

void require_rank(const TLElement& x, const TLElement& y) {
  if (x.n != y.n) {
    throw Error("rank mismatch in Temperley–Lieb arithmetic");
  }
}

}  // namespace

LaurentPolynomial TLElement::coefficient(const AffinePermutation& w) const {
  auto const it = terms.find(w);
  return it == terms.end() ? LaurentPolynomial() : it->second;
}

TLElement& TLElement::operator+=(const TLElement& other) {
  require_rank(*this, other);
  for (const auto& [w, c] : other.terms) {
    add_into(terms, w, c);
  }
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& other) {
  require_rank(*this, other);
  for (const auto& [w, c] : other.terms) {
    add_into(terms, w, -c);
  }
  return *this;
}

TLElement TLElement::scaled(const LaurentPolynomial& c) const {
  TLElement out{n, {}};
  for (const auto& [w, d] : terms) {
    add_into(out.terms, w, d * c);
  }
  return out;
}

TLElement tl_one(int n) {
  check_rank(n);
  return {n, {{AffinePermutation::identity(n), 1}}};
}

TLElement tl_generator(int n, Letter s) {
  check_rank(n);
  return {n, {{AffinePermutation::generator(n, s), 1}}};
}

TLElement tl_basis(const AffinePermutation& w) {
  if (!Cache::instance().is_fc(w)) {
    throw Error("g_w is only a basis element for fully commutative w; "
                + w.to_string() + " is not");
  }
  return {w.rank(), {{w, 1}}};
}

TLElement tl_basis(const Word& w) { return tl_basis(to_permutation(w)); }

TLElement tl_mul_gen(const TLElement& x, Letter s, Side side) {
  if (!is_valid_letter(x.n, s)) {
    throw Error("generator " + std::to_string(s) + " out of range for rank "
                + std::to_string(x.n));
  }
  TLElement out{x.n, {}};
  for (const auto& [w, c] : x.terms) {
    for (const auto& [v, d] : basis_product(w, s, side == Side::Left)) {
      add_into(out.terms, v, c * d);
    }
  }
  return out;
}

TLElement tl_mul(const TLElement& x, const TLElement& y) {
  require_rank(x, y);
  TLElement out{x.n, {}};
  for (const auto& [v, c] : y.terms) {
    Terms const prod = right_fold(x.terms, canonical_word(v));
    for (const auto& [u, d] : prod) {
      add_into(out.terms, u, d * c);
    }
  }
  return out;
}

TLElement tl_word(const Word& w) { return {w.n, evaluate_word(w)}; }

TLElement tl_V(const TLElement& x, const TLElement& y) {
  TLElement const xy = tl_mul(x, y);
  return tl_mul(xy, x) + xy + tl_mul(y, x) + x + y + tl_one(x.n);
}

TLElement tower_R_affine_image(int n) {
  check_rank(n);
  int const m = n + 1;
  LaurentPolynomial const inv_q = LaurentPolynomial::monomial(-1);
  // g_s^{-1} = q^{-1} g_s + (q^{-1} - 1) from the quadratic relation.
  TLElement const s_inv =
      tl_generator(m, m).scaled(inv_q) + tl_one(m).scaled(inv_q - 1);
  return tl_mul(tl_word(Word(m, {m, affine_letter(m)})), s_inv);
}

TLElement tower_R(const TLElement& x) {
  int const n = x.n;
  TLElement const affine_image = tower_R_affine_image(n);
  TLElement out{n + 1, {}};
  for (const auto& [w, c] : x.terms) {
    TLElement image = tl_one(n + 1);
    for (Letter s : canonical_word(w).letters) {
      image = s == affine_letter(n) ? tl_mul(image, affine_image)
                                    : tl_mul_gen(image, s, Side::Right);
    }
    out += image.scaled(c);
  }
  return out;
}

nlohmann::json basis_key_json(const AffinePermutation& w) {
  Word const word = canonical_word(w);
  if (w.rank() == 1) {
    return {{"n", 1}, {"word", format_word(word)}};
  }
  return to_json(parse_normal_form(word));
}

std::string basis_key(const AffinePermutation& w) {
  if (auto hit = Cache::instance().key(w)) {
    return *hit;
  }
  std::string k = basis_key_json(w).dump();
  Cache::instance().store_key(w, k);
  return k;
}

AffinePermutation basis_from_key(int n, const nlohmann::json& key) {
  if (n == 1) {
    if (!key.is_object() || key.value("n", 0) != 1 || !key.contains("word")
        || !key.at("word").is_string()) {
      throw Error("rank-1 basis key must be {\"n\":1,\"word\":...}");
    }
    auto const text = key.at("word").get<std::string>();
    AffinePermutation const w = to_permutation(parse_word(1, text));
    if (format_word(canonical_word(w)) != format_word(parse_word(1, text))) {
      throw Error("rank-1 basis key '" + text + "' is not a canonical word");
    }
    return w;
  }
  NormalForm const nf = normal_form_from_json(key);
  if (nf.n != n) {
    throw Error("basis key of rank " + std::to_string(nf.n)
                + " in an element of rank " + std::to_string(n));
  }
  auto const violations = validate_normal_form(nf);
  if (!violations.empty()) {
    throw Error("invalid normal form key: " + violations.front());
  }
  return to_permutation(emit_normal_form(nf));
}

namespace {

std::vector<std::pair<std::string, const LaurentPolynomial*>> sorted_terms(
    const TLElement& x) {
  std::vector<std::pair<std::string, const LaurentPolynomial*>> out;
  for (const auto& [w, c] : x.terms) {
    out.emplace_back(basis_key(w), &c);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

nlohmann::json to_json(const TLElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : sorted_terms(x)) {
    terms.push_back(
        {{"key", nlohmann::json::parse(key)}, {"coeff", c->to_json()}});
  }
  return {{"n", x.n}, {"terms", terms}};
}

TLElement tl_from_json(const nlohmann::json& j) {
  try {
    int const n = j.at("n").get<int>();
    check_rank(n);
    TLElement out{n, {}};
    for (const auto& term : j.at("terms")) {
      AffinePermutation const w = basis_from_key(n, term.at("key"));
      add_into(out.terms, w, LaurentPolynomial::from_json(term.at("coeff")));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed Temperley–Lieb JSON: ") + e.what());
  }
}

std::string format_element(const TLElement& x) {
  if (x.is_zero()) {
    return "0";
  }
  std::vector<std::pair<Word, const LaurentPolynomial*>> rows;
  for (const auto& [w, c] : x.terms) {
    rows.emplace_back(canonical_word(w), &c);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) {
      return a.first.size() < b.first.size();
    }
    return a.first.letters < b.first.letters;
  });
  std::string out;
  for (const auto& [w, c] : rows) {
    if (!out.empty()) {
      out += " + ";
    }
    out += "(" + c->to_string() + ") g[" + format_word(w) + "]";
  }
  return out;
}

nlohmann::json PropFormulaReport::to_json() const {
  return {{"checked", checked}, {"failures", violations}};
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += jobs) {
        fn(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

struct Leading {
  AffinePermutation i_image;
  AffinePermutation j_image;
};

// I(w), J(w) as elements of rank w.n + 1. Rank 1 has no normal-form
// machinery, so there the substituted words are reduced directly.
Leading leading_keys(const Word& w) {
  if (w.n == 1) {
    return {to_permutation(substitute_I(w)), to_permutation(substitute_J(w))};
  }
  NormalForm const nf = parse_normal_form(w);
  return {to_permutation(emit_normal_form(inject_I(nf))),
          to_permutation(emit_normal_form(inject_J(nf)))};
}

std::vector<FCElement> family(int rank, std::size_t bound, unsigned jobs) {
  std::vector<FCElement> out;
  for (auto& e : enumerate_fc(rank, bound, jobs)) {
    if (e.length() + e.affine_length <= bound) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

PropFormulaReport check_prop_formula(int n, std::size_t bound, unsigned jobs) {
  check_rank(n, 3);
  std::vector<FCElement> elements;
  for (auto& e : family(n - 1, bound, jobs)) {
    if (e.affine_length >= 1) {
      elements.push_back(std::move(e));
    }
  }
  std::vector<std::vector<std::string>> found(elements.size());
  parallel_for(elements.size(), jobs, [&](std::size_t idx) {
    const auto& e = elements[idx];
    auto& out = found[idx];
    std::string const label = format_word(e.word);
    try {
      TLElement const image = tower_R(tl_basis(e.perm));
      auto const lead = leading_keys(e.word);
      int const L = static_cast<int>(e.affine_length);
      BigInt const sign = L % 2 == 0 ? 1 : -1;
      if (image.coefficient(lead.i_image) != LaurentPolynomial::monomial(0, sign)) {
        out.push_back(label + ": coefficient of g_I(w) is "
                      + image.coefficient(lead.i_image).to_string());
      }
      if (image.coefficient(lead.j_image)
          != LaurentPolynomial::monomial(-L, sign)) {
        out.push_back(label + ": coefficient of g_J(w) is "
                      + image.coefficient(lead.j_image).to_string());
      }
      std::size_t const top = e.length() + e.affine_length;
      for (const auto& [x, c] : image.terms) {
        if (x == lead.i_image || x == lead.j_image) {
          continue;
        }
        Word const xw = canonical_word(x);
        if (xw.size() >= top) {
          out.push_back(label + ": term g[" + format_word(xw)
                        + "] is not shorter than I(w)");
        }
        if (count_letter(xw, affine_letter(n)) > e.affine_length) {
          out.push_back(label + ": term g[" + format_word(xw)
                        + "] has larger affine length");
        }
      }
    } catch (const Error& err) {
      out.push_back(label + ": " + err.what());
    }
  });
  PropFormulaReport report;
  report.checked = elements.size();
  for (auto& v : found) {
    report.violations.insert(report.violations.end(), v.begin(), v.end());
  }
  return report;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  std::size_t const cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) {
        continue;
      }
      Rational const f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] -= f * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

bool RankReport::full_rank() const {
  return !ranks.empty()
         && std::all_of(ranks.begin(), ranks.end(),
                        [&](const auto& r) { return r.second == family_size; });
}

nlohmann::json RankReport::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& [q0, rank] : ranks) {
    pts.push_back({{"q0", format_rational(q0)},
                   {"rank", rank},
                   {"full", rank == family_size}});
  }
  return {{"family_size", family_size},
          {"basis_keys", basis_keys},
          {"ranks", pts},
          {"full_rank", full_rank()},
          {"leading_keys_distinct", leading_keys_distinct},
          {"notes", notes}};
}

RankReport check_theoremF_rank(int n, std::size_t bound,
                               const std::vector<Rational>& points,
                               unsigned jobs) {
  check_rank(n, 2);
  auto const elements = family(n - 1, bound, jobs);
  std::vector<TLElement> images(elements.size());
  std::vector<Leading> leads(elements.size(),
                             {AffinePermutation::identity(n),
                              AffinePermutation::identity(n)});
  parallel_for(elements.size(), jobs, [&](std::size_t i) {
    images[i] = tower_R(tl_basis(elements[i].perm));
    leads[i] = leading_keys(elements[i].word);
  });

  RankReport report;
  report.family_size = elements.size();
  std::set<AffinePermutation> keys;
  for (const auto& img : images) {
    for (const auto& [w, c] : img.terms) {
      keys.insert(w);
    }
  }
  report.basis_keys = keys.size();
  std::vector<AffinePermutation> const columns(keys.begin(), keys.end());
  for (const auto& q0 : points) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& img : images) {
      std::vector<Rational> row;
      row.reserve(columns.size());
      for (const auto& w : columns) {
        row.push_back(img.coefficient(w).evaluate(q0));
      }
      rows.push_back(std::move(row));
    }
    report.ranks.emplace_back(q0, rational_rank(std::move(rows)));
  }

  // Leading keys: I and J injective, I(w) = J(w') only for w = w' in W(A).
  std::map<AffinePermutation, std::size_t> by_i;
  std::map<AffinePermutation, std::size_t> by_j;
  bool distinct = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!by_i.emplace(leads[i].i_image, i).second) {
      distinct = false;
      report.notes.push_back("I collides at " + format_word(elements[i].word));
    }
    if (!by_j.emplace(leads[i].j_image, i).second) {
      distinct = false;
      report.notes.push_back("J collides at " + format_word(elements[i].word));
    }
    if (!Cache::instance().is_fc(leads[i].i_image)
        || !Cache::instance().is_fc(leads[i].j_image)) {
      distinct = false;
      report.notes.push_back("leading key not FC at "
                             + format_word(elements[i].word));
    }
  }
  for (const auto& [w, i] : by_i) {
    auto const it = by_j.find(w);
    if (it == by_j.end()) {
      continue;
    }
    bool const finite = elements[i].affine_length == 0;
    if (it->second != i || !finite) {
      distinct = false;
      report.notes.push_back("I(" + format_word(elements[i].word) + ") = J("
                             + format_word(elements[it->second].word) + ")");
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool const finite = elements[i].affine_length == 0;
    if (finite != (leads[i].i_image == leads[i].j_image)) {
      distinct = false;
      report.notes.push_back("I(w) = J(w) mismatch at "
                             + format_word(elements[i].word));
    }
  }
  report.leading_keys_distinct = distinct;
  return report;
}

}  // namespace fcaff
