#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dendroid/automaton.hpp"
#include "dendroid/word.hpp"

namespace dendroid {

/// A chain of automata `τ₁, τ₂, ...` whose state sets compose
/// (`B_k = A_{k+1}`). An autonomous tower repeats one automaton with `A = B`
/// forever.
class Tower {
 public:
  /// Throws DomainError unless consecutive state sets match.
  explicit Tower(std::vector<GroupAutomaton> levels);

  /// Throws DomainError unless the input and output state sets coincide.
  static Tower autonomous(GroupAutomaton aut);

  bool is_autonomous() const noexcept { return autonomous_; }

  /// Number of levels, or nullopt for an autonomous tower.
  std::optional<std::size_t> depth() const;

  /// Automaton acting at level `k` (0-based). Throws DomainError past the end.
  const GroupAutomaton& level(std::size_t k) const;

  /// Throws DomainError if `n` levels are not available.
  void require_depth(std::size_t n) const;

 private:
  Tower() = default;
  std::vector<GroupAutomaton> levels_;
  bool autonomous_ = false;
};

/// Parses `"x1,x2,..."` with the k-th letter read in the level-k alphabet.
LevelWord parse_level_word(const Tower& tower, std::string_view text);

struct ActResult {
  LevelWord image;
  SignedWord section;  // over the state set of level |v|, freely reduced

  friend bool operator==(const ActResult&, const ActResult&) = default;
};

/// `(g(v), g|_v)`. Factors of `g` act right to left; sections are threaded
/// level by level and freely reduced at each step. `g` must be a word over the
/// level-0 input states.
ActResult act(const Tower& tower, const SignedWord& g, const LevelWord& v);

/// Same, starting at level `first_level` (so `g` is over that level's states).
ActResult act_from(const Tower& tower, std::size_t first_level, const SignedWord& g, const LevelWord& v);

/// One level of the wreath recursion: image of `x` under `g` and `g|ₓ`.
std::pair<Letter, SignedWord> act_letter(const GroupAutomaton& aut, const SignedWord& g, const Letter& x);

/// Letters `x` at which some factor of `g` meets a nontrivial restriction.
/// Off this finite set, `g|ₓ` is the identity.
std::vector<Letter> nontrivial_section_letters(const GroupAutomaton& aut, const SignedWord& g);

/// `count[k-1]` = number of level-k words `v` with `a|_v ≠ Id`, for
/// `k = 1..n`. Only nontrivial restrictions are followed.
std::vector<std::uint64_t> activity_profile(const Tower& tower, std::string_view a, std::size_t n);

struct SectionSet {
  std::vector<SignedWord> sections;  // sorted, the identity first when present
  bool saturated = false;            // level-n sections added nothing new
};

/// All distinct reduced sections `g|_v` with `|v| <= n`.
SectionSet section_set(const Tower& tower, const SignedWord& g, std::size_t n);

struct PairLetter {
  Letter first;
  Letter second;

  friend bool operator==(const PairLetter&, const PairLetter&) = default;
  friend auto operator<=>(const PairLetter&, const PairLetter&) = default;
};

std::string to_string(const PairLetter& xy);

/// `τ₁ ⊗ τ₂` on the alphabet `X × Y`, evaluated on demand:
/// `(c, x, y) ↦ (c(x), c|ₓ(y), (c|ₓ)|_y)`.
class ProductAutomaton {
 public:
  /// Throws DomainError unless `outer`'s output states are `inner`'s inputs.
  ProductAutomaton(GroupAutomaton outer, GroupAutomaton inner);

  const std::vector<std::string>& input_states() const noexcept { return outer_.input_states(); }
  const std::vector<std::string>& output_states() const noexcept { return inner_.output_states(); }
  const GroupAutomaton& outer() const noexcept { return outer_; }
  const GroupAutomaton& inner() const noexcept { return inner_; }

  struct Step {
    PairLetter letter;
    std::optional<std::string> section;

    friend bool operator==(const Step&, const Step&) = default;
  };

  Step step(std::string_view c, const PairLetter& xy) const;

 private:
  GroupAutomaton outer_;
  GroupAutomaton inner_;
};

ProductAutomaton product(const GroupAutomaton& outer, const GroupAutomaton& inner);

struct SchreierEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t generator = 0;

  friend bool operator==(const SchreierEdge&, const SchreierEdge&) = default;
};

/// Ball of the word metric (generators and their inverses) around `center`
/// in the Schreier graph of the level-`|center|` action. Vertices are sorted
/// by distance, then canonically; edges `v → s(v)` are kept for every
/// generator `s` whose endpoints both lie in the ball.
struct SchreierBall {
  LevelWord center;
  std::size_t radius = 0;
  std::vector<std::string> generators;
  std::vector<LevelWord> vertices;
  std::vector<std::size_t> distance;
  std::vector<SchreierEdge> edges;

  std::optional<std::size_t> find(const LevelWord& v) const;
};

SchreierBall schreier_ball(const Tower& tower, const LevelWord& center, std::size_t radius);

/// Vertices labeled by their word, one color per generator, loops included.
std::string to_dot(const SchreierBall& ball);

struct WalkStats {
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> returns;  // returns[k-1]: walks at start at time 2k

  double estimate(std::size_t k) const;        // p̂_{2k}
  double standard_error(std::size_t k) const;  // binomial σ of p̂_{2k}
};

/// Monte-Carlo return frequencies of the simple random walk (uniform over
/// generators and inverses) on the level-`|start|` Schreier graph. The result
/// is a function of `(seed, trials)` only: trial `i` draws from its own
/// generator seeded by `(seed, i)`, and counts are summed.
WalkStats walk_return_stats(const Tower& tower, const LevelWord& start, std::size_t steps,
                            std::uint64_t trials, std::uint64_t seed);

/// Seed of trial `i` (SplitMix64 of the pair).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace dendroid
