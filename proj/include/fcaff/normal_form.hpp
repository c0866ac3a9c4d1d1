#pragma once

// Canonical forms of fully commutative elements.
//
// Affine length 0: the falling-run form ⌊l_1,g_1⌋ ... ⌊l_t,g_t⌋ with
// l and g strictly increasing and l_c >= g_c.
//
// Affine length >= 1: the unique reduced word
//     h(i_1,r_1) a ... h(i_p,r_p) a (h(j,j+1) a)^k w_r
// where h(i,r) = ⌊i,1⌋⌈r,n⌉ and w_r is a falling-run form, restricted to
// ⌊j,d_1⌋⌊j+1,d_2⌋...⌊j+z-1,d_z⌋ when k > 0.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fcaff/affine_permutation.hpp"
#include "fcaff/word.hpp"

namespace fcaff {

// ⌊i,j⌋ = sigma_i sigma_{i-1} ... sigma_j, empty when i < j.
Word falling_word(int n, int i, int j);
// ⌈i,j⌉ = sigma_i sigma_{i+1} ... sigma_j, empty when i > j.
Word rising_word(int n, int i, int j);

struct HSegment {
  int i = 0;
  int r = 0;

  friend bool operator==(const HSegment&, const HSegment&) = default;
  friend auto operator<=>(const HSegment&, const HSegment&) = default;
};

bool is_valid_segment(int n, HSegment seg) noexcept;
std::size_t segment_length(int n, HSegment seg) noexcept;

// h(i,r) with h(0,r) = ⌈r,n⌉, h(i,n+1) = ⌊i,1⌋ and h(0,n+1) = 1.
Word h_word(int n, HSegment seg);

struct FallingRun {
  int l = 0;
  int g = 0;

  friend bool operator==(const FallingRun&, const FallingRun&) = default;
  friend auto operator<=>(const FallingRun&, const FallingRun&) = default;
};

struct StembridgeForm {
  std::vector<FallingRun> runs;

  friend bool operator==(const StembridgeForm&,
                         const StembridgeForm&) = default;
};

// Violations of the falling-run constraints, empty when valid.
std::vector<std::string> validate_stembridge(int n, const StembridgeForm& f);
Word emit_stembridge(int n, const StembridgeForm& f);

// The falling-run form of an FC element of W(A_n). Throws if the element has
// positive affine length or is not fully commutative.
StembridgeForm stembridge_form(const AffinePermutation& u);
StembridgeForm stembridge_form(const Word& w);

// Both sigma_1 and sigma_n in the support. Same preconditions as above.
bool is_extremal(const Word& w);

struct ZTail {
  std::vector<int> d;  // z = d.size()

  friend bool operator==(const ZTail&, const ZTail&) = default;
};

struct NormalForm {
  enum class Variant { A, Affine };

  int n = 2;
  Variant variant = Variant::A;
  std::vector<HSegment> pairs;  // (i_t, r_t), Affine only
  int k = 0;
  std::optional<int> j;  // present iff k > 0
  // The A variant always carries a StembridgeForm. The Affine variant carries
  // a ZTail when k > 0 and a StembridgeForm when k = 0.
  std::variant<ZTail, StembridgeForm> tail = StembridgeForm{};

  std::size_t p() const noexcept { return pairs.size(); }
  std::size_t affine_length() const noexcept { return pairs.size() + k; }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm a_variant(int n, StembridgeForm form);

// Each entry names one violated clause; empty when nf is valid.
std::vector<std::string> validate_normal_form(const NormalForm& nf);

// For a fully commutative element of rank n >= 2 (given by any word for it).
NormalForm parse_normal_form(const Word& w);

// Throws on invalid input. The output is reduced and fully commutative.
Word emit_normal_form(const NormalForm& nf);
std::size_t emitted_length(const NormalForm& nf);
// The rightmost factor w_r of the emitted word.
Word tail_word(const NormalForm& nf);

// Every valid normal form whose word has length <= max_total_len, sorted by
// (length, emitted word).
std::vector<NormalForm> enumerate_normal_forms(int n,
                                               std::size_t max_total_len);

nlohmann::json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const nlohmann::json& j);
// Compact serialization with sorted object keys.
std::string canonical_key(const NormalForm& nf);

}  // namespace fcaff
