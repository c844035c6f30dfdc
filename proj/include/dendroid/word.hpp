#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dendroid/alphabet.hpp"

namespace dendroid {

/// Reserved name of the trivial state / identity element.
inline constexpr std::string_view kIdentity = "Id";

/// One factor `state^exponent` of a free-group word, exponent ±1.
struct Syllable {
  std::string state;
  int exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Element of a free group written as a product of generators and inverses.
/// The empty word is the identity. Acting on the tree, the rightmost factor
/// acts first.
struct SignedWord {
  std::vector<Syllable> syllables;

  static SignedWord generator(std::string state, int exponent = 1);

  bool empty() const noexcept { return syllables.empty(); }
  std::size_t size() const noexcept { return syllables.size(); }

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
  friend auto operator<=>(const SignedWord&, const SignedWord&) = default;
};

/// Free reduction (cancels adjacent `s s^-1` pairs).
SignedWord reduce(SignedWord w);

SignedWord inverse(const SignedWord& w);

/// Concatenation followed by free reduction.
SignedWord operator*(const SignedWord& a, const SignedWord& b);

/// `"g,h^-1,g"`; `"Id"` or the empty string denote the identity. Each state
/// name must satisfy `is_identifier`.
SignedWord parse_signed_word(std::string_view text);

/// Inverse of `parse_signed_word`; the identity prints as `"Id"`.
std::string to_string(const SignedWord& w);

/// Sum of exponents of `state` in `w`.
long exponent_sum(const SignedWord& w, std::string_view state);

/// Splits on commas, trimming surrounding blanks; empty input gives no tokens.
std::vector<std::string> split_list(std::string_view text);

/// A vertex of the tree: one letter per level.
using LevelWord = std::vector<Letter>;

/// Comma-joined letters, e.g. `"*,z:0"`. The root prints as the empty string.
std::string to_string(const LevelWord& v);

}  // namespace dendroid
