#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dendroid/action.hpp"
#include "dendroid/automaton.hpp"

namespace dendroid {

/// Input states whose level permutation has an infinite orbit, in declared
/// order.
std::vector<std::string> infinite_generators(const GroupAutomaton& aut);

/// Coordinates indexed by `infinite_generators(aut)`.
using TranslationVector = std::map<std::string, long>;

/// Net exponent of each infinite generator in `w`. This is the homomorphism
/// to `ℤ^J` whose kernel acts with finite support on the first level.
TranslationVector translation_vector(const GroupAutomaton& aut, const SignedWord& w);

/// Level-one permutation of the word `w` (rightmost factor first).
FDPerm level_permutation(const GroupAutomaton& aut, const SignedWord& w);

struct Support {
  enum class Kind { Finite, TailShift };
  Kind kind = Kind::Finite;
  std::vector<Letter> moved;  // Finite: every letter moved, canonical order
  std::string ray;            // TailShift: first ray with nonzero net shift
  std::int64_t shift = 0;
};

/// Smallest window radius `support` accepts for `w`.
std::int64_t required_support_radius(const GroupAutomaton& aut, const SignedWord& w);

/// Support of the level-one action of `w`, computed by evaluating the factors
/// letter by letter on `window(alphabet, radius)`. If every ray has zero net
/// shift, everything outside that window is fixed and the moved set is
/// complete. Throws DomainError (naming the bound) when `radius` is too small.
Support support(const GroupAutomaton& aut, const SignedWord& w, std::int64_t radius);
Support support(const GroupAutomaton& aut, const SignedWord& w);

struct BoundedEquality {
  bool equal = true;
  LevelWord witness;  // when unequal: a word whose images differ
};

/// Whether `w1` and `w2` act identically on all words of length `<= depth`.
/// The first level is compared exactly as finitely described permutations;
/// deeper levels are explored only below letters where one of the words has
/// a nontrivial section.
BoundedEquality bounded_equal(const Tower& tower, const SignedWord& w1, const SignedWord& w2,
                              std::size_t depth);

}  // namespace dendroid
