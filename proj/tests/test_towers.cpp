#include <doctest.h>

#include <set>
#include <tuple>

#include "fcaff/coxeter.hpp"
#include "fcaff/error.hpp"
#include "fcaff/fullcomm.hpp"
#include "fcaff/normal_form.hpp"
#include "fcaff/towers.hpp"
#include "oracles.hpp"

using namespace fcaff;

TEST_CASE("letterwise substitution") {
  CHECK(format_word(substitute_I(parse_word(2, "a"))) == "s3 a");
  CHECK(format_word(substitute_J(parse_word(2, "a"))) == "a s3");
  CHECK(format_word(substitute_J(parse_word(2, "s2 s1 a"))) == "s2 s1 a s3");
  CHECK(substitute_I(parse_word(2, "s1 s2")).n == 3);
}

TEST_CASE("I and J on examples") {
  auto const core = parse_normal_form(parse_word(2, "s2 s1 a"));
  auto const i = inject_I(core);
  CHECK(i.n == 3);
  CHECK(i.p() == 0);
  CHECK(i.k == 1);
  CHECK(i.j == 2);
  CHECK(to_permutation(emit_normal_form(i))
        == to_permutation(parse_word(3, "s2 s1 s3 a")));
  auto const j = inject_J(core);
  CHECK(j == parse_normal_form(parse_word(3, "s2 s1 a s3")));
  CHECK(format_word(emit_normal_form(j)) == "s2 s1 a s3");
  auto const finite = parse_normal_form(parse_word(2, "s2 s1"));
  CHECK(inject_I(finite) == inject_J(finite));
  CHECK(emit_normal_form(inject_I(finite)) == parse_word(3, "s2 s1"));
  auto const a = parse_normal_form(parse_word(2, "a"));
  CHECK(inject_I(a) != inject_J(a));
  NormalForm invalid = a;
  invalid.pairs = {{1, 2}};
  CHECK_THROWS_AS(inject_I(invalid), Error);
  CHECK_THROWS_AS(inject_J(invalid), Error);
}

TEST_CASE("I and J agree with substitute-then-parse") {
  for (int m = 2; m <= 3; ++m) {
    for (const auto& e : enumerate_fc(m, 7)) {
      auto const nf = parse_normal_form(e.word);
      auto const i = inject_I(nf);
      auto const j = inject_J(nf);
      CHECK(validate_normal_form(i).empty());
      CHECK(validate_normal_form(j).empty());
      CHECK(i == parse_normal_form(reduce(substitute_I(e.word))));
      CHECK(j == parse_normal_form(reduce(substitute_J(e.word))));
      Word const wi = emit_normal_form(i);
      Word const wj = emit_normal_form(j);
      CHECK(wi.size() == e.length() + e.affine_length);
      CHECK(wj.size() == e.length() + e.affine_length);
      CHECK(affine_length(wi) == e.affine_length);
      CHECK(affine_length(wj) == e.affine_length);
    }
  }
}

TEST_CASE("images meet exactly on the finite part") {
  auto const r2 = images_meet(2, 6);
  CHECK(r2.ok());
  CHECK(r2.checked == enumerate_fc(2, 6).size());
  auto const r3 = images_meet(3, 6, 2);
  CHECK(r3.ok());
  CHECK(r3.to_json()["failures"].empty());
}

TEST_CASE("substitution is not defined on braid classes") {
  for (int n = 3; n <= 5; ++n) {
    CHECK(substitution_separates_braid_pair(n));
  }
  CHECK_THROWS_AS(substitution_separates_braid_pair(2), Error);
}

TEST_CASE("Coxeter-level coset decomposition") {
  for (int n = 2; n <= 3; ++n) {
    auto const c = coxeter_element(n);
    for (int k = 0; k <= 3; ++k) {
      auto const dec = corollary_decompose(c.power(k));
      CHECK_FALSE(dec.prefix_i.has_value());
      CHECK(dec.d.is_identity());
      CHECK(dec.t == k);
      CHECK(dec.s == n + 1);
    }
    for (const auto& e : enumerate_fc(n, 8)) {
      auto const dec = corollary_decompose(e.word);
      CHECK(assemble(n, dec) == e.perm);
      CHECK(in_image_Rn(dec.d));
      CHECK((dec.s >= 1 && dec.s <= n + 1));
      if (dec.prefix_i) {
        CHECK((*dec.prefix_i >= 0 && *dec.prefix_i <= n - 1));
      }
      // The reported set of forms matches an exhaustive search.
      auto const all = corollary_all_forms(e.word);
      auto const searched = oracle::corollary_search(e.perm, 12);
      std::set<std::tuple<int, int, int>> ours;
      std::set<std::tuple<int, int, int>> theirs;
      for (const auto& f : all) {
        CHECK(assemble(n, f) == e.perm);
        ours.emplace(f.prefix_i.value_or(-1), f.t, f.s);
      }
      for (const auto& f : searched) {
        theirs.emplace(f.prefix_i.value_or(-1), f.t, f.s);
      }
      CHECK(ours == theirs);
    }
  }
  auto const dec = corollary_decompose(parse_word(2, "a s2 s1 a s2"));
  CHECK(assemble(2, dec) == to_permutation(parse_word(2, "a s2 s1 a s2")));
  CHECK_THROWS_AS(corollary_decompose(parse_word(2, "s1 s2 s1")), Error);
}
