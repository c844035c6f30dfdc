#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dendroid/automaton.hpp"

namespace dendroid {

/// A finite window `w_lo ... w_hi` of a bi-infinite word over `{a, b, c}`
/// with no two equal adjacent letters.
class SubshiftWord {
 public:
  /// Throws DomainError on a foreign letter or an adjacent repeat.
  explicit SubshiftWord(std::string letters, std::int64_t lo = 0);

  const std::string& letters() const noexcept { return letters_; }
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(letters_.size()) - 1; }
  std::size_t size() const noexcept { return letters_.size(); }

  /// Letter at index `n`, or nullopt outside the window.
  std::optional<char> at(std::int64_t n) const;

  /// Start indices of every occurrence of `factor`.
  std::vector<std::int64_t> occurrences(std::string_view factor) const;

 private:
  std::string letters_;
  std::int64_t lo_;
};

inline constexpr std::string_view kSubshiftLetters = "abc";

bool is_reduced(std::string_view v);

/// Nonempty reduced words over `{a, b, c}` of length `<= max_length`,
/// shortest first, lexicographic within a length.
std::vector<std::string> reduced_words(std::size_t max_length);

/// Concatenation of `reduced_words(max_length)` with a separating letter
/// wherever two blocks would repeat a letter, padded by `margin` alternating
/// letters on each side. Index 0 is the first margin letter.
SubshiftWord universal_word(std::size_t max_length, std::size_t margin);
SubshiftWord universal_word(std::size_t max_length);  // margin = max_length + 2

/// The involution `s` restricted to the window:
/// `s(n) = n+1` if `w_n = s`, `n-1` if `w_{n-1} = s`, else `n`.
/// An index is reliable when its image does not depend on letters outside
/// the window (only `lo` can fail, when `w_lo ≠ s`).
struct WindowPerm {
  char letter = 'a';
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::int64_t> image;
  std::vector<bool> reliable;

  bool contains(std::int64_t n) const noexcept { return n >= lo && n <= hi; }
  std::int64_t operator()(std::int64_t n) const { return image.at(static_cast<std::size_t>(n - lo)); }
  bool is_reliable(std::int64_t n) const { return contains(n) && reliable[static_cast<std::size_t>(n - lo)]; }
};

/// Throws std::logic_error if both moving cases apply at some index (cannot
/// happen for a valid word).
WindowPerm appendix_perm(char s, const SubshiftWord& w);

/// Image of `n` under the word `v` with `v[0]` applied first, or nullopt if
/// some step leaves the reliable part of the window.
std::optional<std::int64_t> apply_word(std::string_view v, const SubshiftWord& w, std::int64_t n);

/// `s∘s` fixes every reliable index whose image is reliable, for each `s`.
bool check_involutions(const SubshiftWord& w);

/// The two moving cases never both apply inside the window.
bool check_exclusivity(const SubshiftWord& w);

struct FaithfulnessEntry {
  std::string word;
  std::int64_t moved = 0;
  std::int64_t image = 0;
};

struct FaithfulnessReport {
  bool faithful = true;
  std::vector<FaithfulnessEntry> entries;  // one per reduced word, in order
  std::vector<std::string> unmoved;        // words with no moved interior index
};

/// For every nonempty reduced word `v` with `|v| <= max_length`, finds an index
/// at distance more than `|v|` from the window edges that `v` moves.
/// Throws DomainError unless each such `v` occurs in `w` at least
/// `max_length + 2` letters away from both edges.
FaithfulnessReport check_faithful(std::size_t max_length, const SubshiftWord& w);

/// Schreier graph of the three involutions on indices `lo .. hi+1`: the
/// 2-cycle `n ↔ n+1` colored `w_n`, and loops at `n` for the letters other
/// than `w_{n-1}` and `w_n` (interior indices only).
struct SegmentGraph {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  struct Edge {
    std::int64_t from;
    std::int64_t to;
    char letter;
  };
  std::vector<Edge> edges;
};

SegmentGraph appendix_schreier_segment(const SubshiftWord& w);

/// Colors: a blue, b red, c green.
std::string to_dot(const SegmentGraph& g);

/// The window action as an automaton: states `a, b, c`, one ray `n` of
/// indices, each state swapping `i ↔ i+1` where `w_i` is its letter, all
/// restrictions trivial.
GroupAutomaton window_automaton(const SubshiftWord& w);

}  // namespace dendroid
