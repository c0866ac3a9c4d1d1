#pragma once

// Defining relations of B(Ã_n), as pairs of words with equal images.

#include <string>
#include <utility>
#include <vector>

#include "fcaff/braid.hpp"

namespace support {

struct Relation {
  std::string name;
  fcaff::AffineBraidWord lhs;
  fcaff::AffineBraidWord rhs;
};

inline fcaff::AffineBraidWord positive(int n, std::vector<fcaff::Letter> ls) {
  fcaff::AffineBraidWord w = fcaff::AffineBraidWord::identity(n);
  for (auto s : ls) {
    w.letters.push_back({s, 1});
  }
  return w;
}

inline std::vector<Relation> braid_relations(int n) {
  int const a = n + 1;
  std::vector<Relation> out;
  auto name = [](const char* tag, int i, int j) {
    return std::string(tag) + "(" + std::to_string(i) + "," + std::to_string(j)
           + ")";
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      out.push_back({name("1", i, j), positive(n, {i, j}), positive(n, {j, i})});
    }
  }
  for (int i = 1; i < n; ++i) {
    out.push_back({name("2", i, i + 1), positive(n, {i, i + 1, i}),
                   positive(n, {i + 1, i, i + 1})});
  }
  for (int i = 2; i <= n - 1; ++i) {
    out.push_back({name("3", i, a), positive(n, {i, a}), positive(n, {a, i})});
  }
  out.push_back({name("4", 1, a), positive(n, {1, a, 1}), positive(n, {a, 1, a})});
  out.push_back({name("5", n, a), positive(n, {n, a, n}), positive(n, {a, n, a})});
  return out;
}

}  // namespace support
