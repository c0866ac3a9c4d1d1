#include <doctest.h>

#include <random>

#include "fcaff/braid.hpp"
#include "fcaff/error.hpp"
#include "fcaff/fullcomm.hpp"
#include "fcaff/garside.hpp"
#include "support.hpp"

using namespace fcaff;

namespace {

SignedBraidWord artin(int m, std::vector<int> signed_indices) {
  SignedBraidWord w(m, {});
  for (int x : signed_indices) {
    w.letters.push_back({std::abs(x), x > 0 ? 1 : -1});
  }
  return w;
}

AffineBraidWord bw(int n, const char* text) { return parse_braid_word(n, text); }

}  // namespace

TEST_CASE("Garside normal form") {
  auto const delta = garside_normal_form(artin(3, {1, 2, 1}));
  CHECK(delta == garside_normal_form(artin(3, {2, 1, 2})));
  CHECK(delta.infimum == 1);
  CHECK(delta.factors.empty());
  auto const trivial = garside_normal_form(artin(3, {1, -1}));
  CHECK(trivial.infimum == 0);
  CHECK(trivial.factors.empty());
  CHECK(garside_normal_form(artin(3, {1, 2}))
        != garside_normal_form(artin(3, {2, 1})));
  CHECK(garside_normal_form(artin(4, {1, 3})) == garside_normal_form(artin(4, {3, 1})));
  CHECK(garside_normal_form(artin(3, {-1})).infimum == -1);
  CHECK(free_reduce(artin(4, {1, 2, -2, 3, -3, -1})).letters.empty());
  CHECK_THROWS_AS(SignedBraidWord(3, {{3, 1}}), Error);
}

TEST_CASE("Garside normal form: random words") {
  std::mt19937 rng(20261014);
  for (int m = 3; m <= 6; ++m) {
    std::uniform_int_distribution<int> index(1, m - 1);
    std::uniform_int_distribution<int> len(0, 14);
    for (int trial = 0; trial < 150; ++trial) {
      SignedBraidWord w(m, {});
      for (int l = len(rng); l > 0; --l) {
        w.letters.push_back({index(rng), rng() % 3 == 0 ? -1 : 1});
      }
      auto const nf = garside_normal_form(w);
      for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) {
        CHECK(is_left_weighted(nf.factors[i], nf.factors[i + 1]));
      }
      // Normal form is idempotent and a complete invariant of the element.
      CHECK(garside_normal_form(normal_form_word(nf)) == nf);
      auto const unit = garside_normal_form(w * w.inverse());
      CHECK(unit.infimum == 0);
      CHECK(unit.factors.empty());
      // Inserting a relation does not change the element.
      SignedBraidWord longer = w;
      int const i = index(rng);
      longer.letters.insert(longer.letters.begin() + longer.letters.size() / 2,
                            {{i, 1}, {i, -1}});
      CHECK(garside_normal_form(longer) == nf);
    }
  }
}

TEST_CASE("embedding into Artin braids") {
  auto const s1 = embed_to_artin(bw(2, "s1"));
  CHECK(s1.strands == 4);
  CHECK(s1.letters == std::vector<ArtinLetter>{{2, 1}});
  CHECK(embed_to_artin(AffineBraidWord::identity(2)).letters.empty());
  // The affine generator at n = 2: the conjugate of strand-crossing 3 by
  // 1 1 2 3, which reduces freely to seven letters.
  auto const image = embed_to_artin(bw(2, "a"));
  auto const expected = artin(4, {1, 1, 2, 3, -2, -1, -1});
  CHECK(free_reduce(image) == expected);
  auto const unreduced = artin(4, {1, 1, 2, 3, 3, -3, -2, -1, -1});
  CHECK(garside_normal_form(unreduced) == garside_normal_form(image));
}

TEST_CASE("braid parsing") {
  auto const w = bw(3, "s1 !a s3");
  CHECK(w.letters == std::vector<BraidLetter>{{1, 1}, {4, -1}, {3, 1}});
  CHECK(format_braid_word(w) == "s1 !a s3");
  CHECK_FALSE(w.is_positive());
  CHECK(w.inverse().letters == std::vector<BraidLetter>{{3, -1}, {4, 1}, {1, -1}});
  CHECK_THROWS_AS(bw(3, "s1 !x"), ParseError);
  try {
    bw(3, "s1 !s9");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("defining relations and simple identities") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& rel : support::braid_relations(n)) {
      CAPTURE(rel.name);
      CHECK(braid_equal(rel.lhs, rel.rhs));
      CHECK(braid_equal(rel.lhs.inverse(), rel.rhs.inverse()));
    }
  }
  CHECK(braid_equal(bw(3, "s2 a"), bw(3, "a s2")));
  CHECK_FALSE(braid_equal(bw(2, "s1 a"), bw(2, "a s1")));
  CHECK_FALSE(braid_equal(bw(2, "s1 s1"), AffineBraidWord::identity(2)));
  CHECK(braid_equal(bw(2, "a s2 a !s2"), bw(2, "s2 a")));
  CHECK_THROWS_AS(braid_equal(bw(2, "s1"), bw(3, "s1")), Error);
}

TEST_CASE("positive classes agree with the word problem") {
  CHECK(positive_class_equal(bw(2, "s1 s2 s1"), bw(2, "s2 s1 s2")));
  CHECK_FALSE(positive_class_equal(bw(2, "s1 s2"), bw(2, "s2 s1")));
  CHECK_THROWS_AS(positive_class_equal(bw(2, "!s1"), bw(2, "s1")), Error);
  for (int n = 2; n <= 3; ++n) {
    auto const elements = enumerate_fc(n, 5);
    for (std::size_t x = 0; x < elements.size(); ++x) {
      for (std::size_t y = x; y < elements.size(); ++y) {
        if (elements[x].length() != elements[y].length()) {
          continue;
        }
        auto const u = positive_lift(elements[x].word);
        auto const v = positive_lift(elements[y].word);
        CHECK(positive_class_equal(u, v) == braid_equal(u, v));
        CHECK(braid_equal(u, v) == (x == y));
      }
    }
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int const n = 2 + trial % 2;
    std::uniform_int_distribution<int> letter(1, n + 1);
    AffineBraidWord u = AffineBraidWord::identity(n);
    for (int l = 0; l < 6; ++l) {
      u.letters.push_back({letter(rng), 1});
    }
    AffineBraidWord v = u;
    std::shuffle(v.letters.begin(), v.letters.end(), rng);
    CHECK(positive_class_equal(u, v) == braid_equal(u, v));
  }
}

TEST_CASE("the Dynkin rotation") {
  for (int n = 2; n <= 4; ++n) {
    auto const c = c_word(n);
    CHECK(c.letters.size() == static_cast<std::size_t>(n + 1));
    for (Letter s = 1; s <= n; ++s) {
      AffineBraidWord const g(n - 1, {{s, 1}});
      CHECK(psi(g, n) == g);
      CHECK(braid_equal(c * flatten(g), flatten(psi(g)) * c));
      CHECK(braid_equal(c * flatten(g.inverse()), flatten(psi(g.inverse())) * c));
    }
  }
  CHECK(psi(bw(2, "s2"), 1) == bw(2, "s1"));
  CHECK(psi(bw(2, "a"), 1) == bw(2, "s2"));
  CHECK(psi(bw(2, "s1"), 1) == bw(2, "a"));
  CHECK(format_braid_word(flatten(bw(2, "a"))) == "s3 a !s3");
  CHECK(braid_equal(flatten(bw(1, "a")) * AffineBraidWord(2, {{2, 1}}),
                    bw(2, "s2 a")));
  CHECK(braid_equal(bw(2, "a") * flatten(bw(1, "a")), bw(2, "s2 a")));
}

TEST_CASE("powers of the affine core") {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= 6; ++k) {
        CAPTURE(n);
        CAPTURE(j);
        CAPTURE(k);
        CHECK(verify_lemma31(n, j, k));
      }
    }
  }
  auto const sides = lemma31_sides(2, 2, 3);
  CHECK(sides.case_label == 'n');
  CHECK(sides.t == 3);
  CHECK(sides.u.letters.empty());
  CHECK(lemma31_sides(3, 1, 5).case_label == 'm');
  CHECK(lemma31_sides(3, 1, 2).case_label == '0');
  CHECK_THROWS_AS(verify_lemma31(3, 0, 1), Error);
  CHECK_THROWS_AS(verify_lemma31(3, 1, 0), Error);
}

TEST_CASE("decomposition of fully commutative braids") {
  for (int n = 2; n <= 3; ++n) {
    auto const c = c_word(n);
    for (int k = 0; k <= 3; ++k) {
      Word w = Word::identity(n);
      for (const auto& l : c.power(k).letters) {
        w.letters.push_back(l.letter);
      }
      auto const dec = decompose_fc_braid(w);
      CHECK_FALSE(dec.prefix_i.has_value());
      CHECK(dec.t == k);
      CHECK(dec.v.empty());
      CHECK(braid_equal(dec.u, AffineBraidWord::identity(n - 1)));
    }
    for (const auto& e : enumerate_fc(n, 7)) {
      auto const dec = decompose_fc_braid(e.word);
      CHECK(braid_equal(assemble(n, dec), positive_lift(e.word)));
      for (auto s : dec.v.letters) {
        CHECK(s <= n);
      }
    }
  }
  auto const w = parse_word(2, "s2 s1 a s2");
  CHECK(braid_equal(assemble(2, decompose_fc_braid(w)), positive_lift(w)));
  CHECK_THROWS_AS(decompose_fc_braid(parse_word(2, "s1 s2 s1")), Error);
}
