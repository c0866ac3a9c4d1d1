#include <doctest.h>

#include <set>

#include "fcaff/coxeter.hpp"
#include "fcaff/error.hpp"
#include "fcaff/fullcomm.hpp"
#include "fcaff/normal_form.hpp"

using namespace fcaff;
using nlohmann::json;

namespace {

NormalForm affine(int n, std::vector<HSegment> pairs, int k,
                  std::optional<int> j, ZTail tail) {
  NormalForm nf;
  nf.n = n;
  nf.variant = NormalForm::Variant::Affine;
  nf.pairs = std::move(pairs);
  nf.k = k;
  nf.j = j;
  nf.tail = std::move(tail);
  return nf;
}

}  // namespace

TEST_CASE("h segments") {
  CHECK(h_word(2, {0, 3}).empty());
  CHECK(format_word(h_word(2, {1, 2})) == "s1 s2");
  CHECK(format_word(h_word(3, {2, 4})) == "s2 s1");
  CHECK(format_word(h_word(3, {0, 2})) == "s2 s3");
  CHECK_FALSE(is_valid_segment(3, {0, 1}));
  CHECK_FALSE(is_valid_segment(3, {2, 2}));
  CHECK_THROWS_AS(h_word(3, {3, 2}), Error);
  CHECK(segment_length(3, {1, 3}) == 2);
  CHECK(segment_length(3, {2, 3}) == 3);
}

TEST_CASE("finite type A forms") {
  CHECK(stembridge_form(Word::identity(3)).runs.empty());
  CHECK(stembridge_form(parse_word(3, "s1")).runs
        == std::vector<FallingRun>{{1, 1}});
  CHECK(stembridge_form(parse_word(3, "s2 s1 s3 s2")).runs
        == std::vector<FallingRun>{{2, 1}, {3, 2}});
  CHECK_THROWS_AS(stembridge_form(parse_word(3, "s1 s2 s1")), Error);
  CHECK_THROWS_AS(stembridge_form(parse_word(3, "a")), Error);
  CHECK(is_extremal(parse_word(2, "s1 s2")));
  CHECK_FALSE(is_extremal(parse_word(2, "s1")));
  CHECK(is_extremal(parse_word(3, "s3 s2 s1")));
  CHECK_FALSE(validate_stembridge(3, {{{2, 1}, {2, 2}}}).empty());
  CHECK_FALSE(validate_stembridge(3, {{{1, 2}}}).empty());
  for (int n = 2; n <= 4; ++n) {
    for (const auto& e : enumerate_fc(n, 10)) {
      if (e.affine_length > 0) {
        continue;
      }
      auto const f = stembridge_form(e.perm);
      CHECK(validate_stembridge(n, f).empty());
      Word const w = emit_stembridge(n, f);
      CHECK(w.size() == e.length());
      CHECK(to_permutation(w) == e.perm);
    }
  }
}

TEST_CASE("parse examples") {
  auto const nf = parse_normal_form(parse_word(2, "a s2 s1 a s2"));
  CHECK(nf == affine(2, {{0, 3}}, 1, 2, ZTail{{2}}));
  CHECK(parse_normal_form(parse_word(2, "s2 s1 a"))
        == affine(2, {}, 1, 2, ZTail{}));
  auto const finite = parse_normal_form(parse_word(2, "s1"));
  CHECK(finite.variant == NormalForm::Variant::A);
  CHECK(std::get<StembridgeForm>(finite.tail).runs
        == std::vector<FallingRun>{{1, 1}});
  CHECK(format_word(emit_normal_form(affine(3, {}, 1, 3, ZTail{})))
        == "s3 s2 s1 a");
  CHECK(emit_normal_form(a_variant(2, {})).empty());
  CHECK_THROWS_AS(parse_normal_form(parse_word(2, "s1 s2 s1")), Error);
  CHECK_THROWS_AS(parse_normal_form(parse_word(1, "s1")), Error);
}

TEST_CASE("validation names the violated clause") {
  auto const bad = affine(3, {{1, 2}}, 0, std::nullopt, ZTail{});
  auto const v = validate_normal_form(bad);
  REQUIRE_FALSE(v.empty());
  bool named = false;
  for (const auto& msg : v) {
    named = named || msg.find("r_p - i_p >= 2") != std::string::npos;
  }
  CHECK(named);
  auto const crowded =
      affine(2, {{0, 3}, {1, 2}}, 0, std::nullopt, ZTail{});
  CHECK_FALSE(validate_normal_form(crowded).empty());
  CHECK_FALSE(validate_normal_form(affine(2, {}, 1, std::nullopt, ZTail{}))
                  .empty());
  CHECK_FALSE(validate_normal_form(affine(2, {}, 1, 3, ZTail{})).empty());
  CHECK_THROWS_AS(emit_normal_form(bad), Error);
}

TEST_CASE("normal forms biject onto fully commutative elements") {
  for (int n = 2; n <= 4; ++n) {
    std::size_t const bound = n == 4 ? 7 : 9;
    auto const forms = enumerate_normal_forms(n, bound);
    auto const fc = enumerate_fc(n, bound);
    CHECK(forms.size() == fc.size());
    std::set<AffinePermutation> fc_set;
    for (const auto& e : fc) {
      fc_set.insert(e.perm);
    }
    std::set<AffinePermutation> images;
    for (const auto& nf : forms) {
      CHECK(validate_normal_form(nf).empty());
      Word const w = emit_normal_form(nf);
      CHECK(w.size() == emitted_length(nf));
      CHECK(is_reduced(w));
      CHECK(is_fully_commutative(w));
      CHECK(count_letter(w, affine_letter(n)) == nf.affine_length());
      CHECK(parse_normal_form(w) == nf);
      CHECK(nf.p() <= static_cast<std::size_t>((n + 1) / 2));
      images.insert(to_permutation(w));
    }
    CHECK(images == fc_set);
    for (const auto& e : fc) {
      auto const nf = parse_normal_form(e.word);
      CHECK(to_permutation(emit_normal_form(nf)) == e.perm);
    }
  }
}

TEST_CASE("the simple family parses with j = n") {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i < n; ++i) {
      for (int t = 1; t <= 3; ++t) {
        Word const w = h_word(n, {i, n + 1}) * Word(n, {affine_letter(n)})
                       * (h_word(n, {n, n + 1}) * Word(n, {affine_letter(n)}))
                             .power(t);
        auto const nf = parse_normal_form(w);
        REQUIRE(nf.j.has_value());
        CHECK(*nf.j == n);
      }
    }
  }
}

TEST_CASE("JSON round trip and canonical keys") {
  auto const nf = parse_normal_form(parse_word(2, "a s2 s1 a s2"));
  json const j = to_json(nf);
  CHECK(j.dump()
        == R"({"j":2,"k":1,"n":2,"pairs":[[0,3]],"tail":{"d":[2],"kind":"Z","z":1},"variant":"Affine"})");
  CHECK(normal_form_from_json(j) == nf);
  CHECK(canonical_key(nf) == j.dump());
  auto const finite = parse_normal_form(parse_word(3, "s2 s1 s3 s2"));
  CHECK(normal_form_from_json(to_json(finite)) == finite);
  CHECK_THROWS_AS(normal_form_from_json(json::parse(R"({"n":2})")), Error);
  json broken = j;
  broken["tail"]["z"] = 2;
  CHECK_THROWS_AS(normal_form_from_json(broken), Error);
}
