#include "fcaff/fullcomm.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <thread>
#include <unordered_set>

#include "fcaff/coxeter.hpp"
#include "fcaff/error.hpp"

namespace fcaff {

namespace {

struct LettersHash {
  std::size_t operator()(const std::vector<Letter>& v) const noexcept {
    std::size_t h = v.size();
    for (Letter s : v) {
      h = h * 31 + static_cast<std::size_t>(s);
    }
    return h;
  }
};

std::optional<std::size_t> braid_factor_at(int n, const std::vector<Letter>& v) {
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    if (v[i] == v[i + 2] && braid_adjacent(n, v[i], v[i + 1])) {
      return i;
    }
  }
  return std::nullopt;
}

// Breadth-first closure of `start` under commutation moves, plus braid moves
// when `braids` is set. `visit` may stop the search by returning true.
template <typename Visit>
std::vector<std::vector<Letter>> closure(int n, const std::vector<Letter>& start,
                                         bool braids, std::size_t cap,
                                         Visit&& visit) {
  std::unordered_set<std::vector<Letter>, LettersHash> seen{start};
  std::vector<std::vector<Letter>> order{start};
  std::deque<std::vector<Letter>> queue{start};
  if (visit(start)) {
    return order;
  }
  auto push = [&](std::vector<Letter>&& v) {
    if (seen.insert(v).second) {
      if (seen.size() > cap) {
        throw ResourceLimit("commutation-class search exceeded cap of "
                            + std::to_string(cap) + " words");
      }
      order.push_back(v);
      queue.push_back(std::move(v));
      return visit(order.back());
    }
    return false;
  };
  while (!queue.empty()) {
    std::vector<Letter> v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (commute(n, v[i], v[i + 1])) {
        auto u = v;
        std::swap(u[i], u[i + 1]);
        if (push(std::move(u))) {
          return order;
        }
      }
      if (braids && i + 2 < v.size() && v[i] == v[i + 2]
          && braid_adjacent(n, v[i], v[i + 1])) {
        auto u = v;
        u[i] = u[i + 2] = v[i + 1];
        u[i + 1] = v[i];
        if (push(std::move(u))) {
          return order;
        }
      }
    }
  }
  return order;
}

void require_reduced(const Word& w) {
  if (!is_reduced(w)) {
    throw Error("word '" + format_word(w) + "' is not reduced");
  }
}

}  // namespace

CommutationClass commutation_class(const Word& w, std::size_t cap) {
  require_reduced(w);
  auto members = closure(w.n, w.letters, false, cap,
                         [](const std::vector<Letter>&) { return false; });
  std::sort(members.begin(), members.end());
  CommutationClass out;
  for (auto& m : members) {
    out.members.emplace_back(w.n, std::move(m));
  }
  out.representative = out.members.front();
  return out;
}

std::optional<BraidWitness> find_braid_factor(const Word& w, std::size_t cap) {
  require_reduced(w);
  std::optional<BraidWitness> found;
  closure(w.n, w.letters, false, cap, [&](const std::vector<Letter>& v) {
    if (auto pos = braid_factor_at(w.n, v)) {
      found = BraidWitness{Word(w.n, v), *pos};
      return true;
    }
    return false;
  });
  return found;
}

bool is_fully_commutative(const Word& w, std::size_t cap) {
  if (w.n == 1) {
    return true;
  }
  return !find_braid_factor(reduce(w), cap).has_value();
}

bool is_fully_commutative(const AffinePermutation& u, std::size_t cap) {
  if (u.rank() == 1) {
    return true;
  }
  return !find_braid_factor(canonical_word(u), cap).has_value();
}

std::map<Letter, std::size_t> occurrence_profile(const Word& w) {
  std::map<Letter, std::size_t> out;
  for (Letter s : w.letters) {
    ++out[s];
  }
  return out;
}

std::vector<Word> all_reduced_expressions(const Word& w, std::size_t cap) {
  require_reduced(w);
  auto words = closure(w.n, w.letters, true, cap,
                       [](const std::vector<Letter>&) { return false; });
  std::sort(words.begin(), words.end());
  std::vector<Word> out;
  out.reserve(words.size());
  for (auto& v : words) {
    out.emplace_back(w.n, std::move(v));
  }
  return out;
}

bool check_HIT(const Word& w, std::size_t cap) {
  auto const exprs = all_reduced_expressions(reduce(w), cap);
  auto const profile = occurrence_profile(exprs.front());
  return std::all_of(exprs.begin(), exprs.end(), [&](const Word& e) {
    return occurrence_profile(e) == profile;
  });
}

std::size_t affine_length(const Word& w) {
  Word const r = reduce(w);
  if (!is_fully_commutative(r)) {
    throw Error("affine length is only defined for fully commutative "
                "elements; '" + format_word(w) + "' is not");
  }
  return count_letter(r, affine_letter(w.n));
}

std::vector<FCElement> enumerate_fc(int n, std::size_t max_len, unsigned jobs,
                                    std::size_t element_cap) {
  check_rank(n);
  jobs = std::max(1u, jobs);
  std::vector<FCElement> all;
  std::vector<FCElement> layer{
      {AffinePermutation::identity(n), Word::identity(n), 0}};
  for (std::size_t len = 0;; ++len) {
    all.insert(all.end(), layer.begin(), layer.end());
    if (all.size() > element_cap) {
      throw ResourceLimit("FC enumeration exceeded cap of "
                          + std::to_string(element_cap) + " elements");
    }
    if (len == max_len) {
      break;
    }
    // Candidate extensions w·s, deduplicated by window.
    std::vector<std::pair<AffinePermutation, Word>> candidates;
    std::unordered_set<AffinePermutation, AffinePermutationHash> seen;
    for (const auto& e : layer) {
      for (Letter s = 1; s <= n + 1; ++s) {
        if (e.perm.has_right_descent(s)) {
          continue;
        }
        auto v = e.perm.times_generator(s);
        if (seen.insert(v).second) {
          Word extended = e.word;
          extended.letters.push_back(s);
          candidates.emplace_back(std::move(v), std::move(extended));
        }
      }
    }
    std::vector<char> keep(candidates.size(), 0);
    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t i = begin; i < candidates.size(); i += step) {
        keep[i] = n == 1 || !find_braid_factor(candidates[i].second);
      }
    };
    if (jobs == 1 || candidates.size() < 64) {
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
    std::vector<FCElement> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (keep[i]) {
        Word canon = canonical_word(candidates[i].first);
        std::size_t const L = count_letter(canon, affine_letter(n));
        next.push_back({std::move(candidates[i].first), std::move(canon), L});
      }
    }
    std::sort(next.begin(), next.end(),
              [](const FCElement& x, const FCElement& y) {
                return x.word.letters < y.word.letters;
              });
    layer = std::move(next);
  }
  return all;
}

}  // namespace fcaff
