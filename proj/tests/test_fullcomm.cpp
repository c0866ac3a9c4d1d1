#include <doctest.h>

#include <map>

#include "fcaff/coxeter.hpp"
#include "fcaff/error.hpp"
#include "fcaff/fullcomm.hpp"
#include "oracles.hpp"

using namespace fcaff;

TEST_CASE("commutation classes") {
  CHECK(commutation_class(Word::identity(2)).members.size() == 1);
  auto const cls = commutation_class(parse_word(3, "s1 s3"));
  REQUIRE(cls.members.size() == 2);
  CHECK(format_word(cls.representative) == "s1 s3");
  CHECK(commutation_class(parse_word(2, "s2 s1 a")).members.size() == 1);
  CHECK_THROWS_AS(commutation_class(parse_word(2, "s1 s1")), Error);
}

TEST_CASE("full commutativity: examples") {
  CHECK_FALSE(is_fully_commutative(parse_word(2, "s1 s2 s1")));
  CHECK(is_fully_commutative(parse_word(2, "s2 s1 a")));
  CHECK_FALSE(is_fully_commutative(parse_word(2, "a s1 a")));
  CHECK(is_fully_commutative(parse_word(2, "s1 s1")));
  auto const witness = find_braid_factor(parse_word(3, "s2 s1 s3 s2 s1"));
  REQUIRE(witness.has_value());
  auto const& m = witness->member.letters;
  CHECK(m[witness->position] == m[witness->position + 2]);
  CHECK_FALSE(find_braid_factor(parse_word(2, "s2 s1 a")).has_value());
}

TEST_CASE("full commutativity agrees with two independent criteria") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& e : enumerate_elements(n, 8)) {
      bool const fc = is_fully_commutative(e.word);
      CHECK(fc == !oracle::closure_has_braid_factor(e.word));
      CHECK(fc == oracle::avoids_321(e.perm));
    }
  }
}

TEST_CASE("occurrence profiles") {
  auto const profile = occurrence_profile(parse_word(2, "s2 s1 a"));
  CHECK(profile == std::map<Letter, std::size_t>{{1, 1}, {2, 1}, {3, 1}});
  CHECK(occurrence_profile(Word::identity(2)).empty());
  CHECK(all_reduced_expressions(parse_word(2, "s1 s2 s1")).size() == 2);
  // Both reduced expressions of s1 s2 s1 have profile {2,1} and {1,2}: the
  // profiles differ, so the check correctly rejects this element.
  CHECK_FALSE(check_HIT(parse_word(2, "s1 s2 s1")));
  for (int n = 2; n <= 3; ++n) {
    for (const auto& e : enumerate_fc(n, 7)) {
      CHECK(check_HIT(e.word));
      auto const base = occurrence_profile(e.word);
      for (const auto& member : commutation_class(e.word).members) {
        CHECK(occurrence_profile(member) == base);
      }
    }
  }
}

TEST_CASE("affine length") {
  CHECK(affine_length(parse_word(2, "s1")) == 0);
  CHECK(affine_length(parse_word(2, "s2 s1 a")) == 1);
  CHECK(affine_length(parse_word(2, "s2 s1 a").power(3)) == 3);
  CHECK_THROWS_AS(affine_length(parse_word(2, "a s1 a")), Error);
  for (const auto& e : enumerate_fc(3, 7)) {
    CHECK((e.affine_length == 0) == e.perm.is_finite_part());
    CHECK(e.affine_length == count_letter(e.word, affine_letter(3)));
  }
}

TEST_CASE("enumeration of fully commutative elements") {
  CHECK(enumerate_fc(2, 0).size() == 1);
  CHECK(enumerate_fc(2, 1).size() == 4);
  CHECK(enumerate_fc(2, 5).size() == 28);
  CHECK(enumerate_fc(3, 6).size() == 83);
  CHECK(enumerate_fc(1, 6).size() == 13);
  for (int n = 2; n <= 4; ++n) {
    std::size_t const bound = n == 4 ? 6 : 8;
    auto const fc = enumerate_fc(n, bound);
    // Independent count: filter the whole ball by pattern avoidance.
    std::size_t avoiding = 0;
    for (const auto& e : enumerate_elements(n, bound)) {
      avoiding += oracle::avoids_321(e.perm) ? 1 : 0;
    }
    CHECK(fc.size() == avoiding);
    // Diagram rotation preserves the count at each length.
    std::map<std::size_t, std::size_t> per_length;
    std::map<std::size_t, std::size_t> rotated;
    for (const auto& e : fc) {
      ++per_length[e.length()];
      Word r = e.word;
      for (auto& s : r.letters) {
        s = s % (n + 1) + 1;
      }
      CHECK(is_fully_commutative(r));
      ++rotated[length(to_permutation(r))];
    }
    CHECK(per_length == rotated);
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  auto const serial = enumerate_fc(3, 8, 1);
  auto const parallel = enumerate_fc(3, 8, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].word == parallel[i].word);
  }
}
