#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dendroid/alphabet.hpp"
#include "dendroid/family.hpp"
#include "dendroid/permutation.hpp"
#include "dendroid/word.hpp"

namespace dendroid {

/// A group automaton `A₊ × X → X × B₊` with finitely many states.
///
/// Every input state carries a permutation of the alphabet; the restriction
/// `a|ₓ` is stored only where it is nontrivial. The identity state is never
/// stored: it is the reserved symbol `Id` and satisfies `τ(Id, x) = (x, Id)`.
class GroupAutomaton {
 public:
  struct Restriction {
    std::string input;
    Letter letter;
    std::string output;

    friend bool operator==(const Restriction&, const Restriction&) = default;
  };

  /// Validates state names, permutation alphabets, and restriction entries;
  /// throws DomainError on the first violation (e.g. "duplicate restriction").
  GroupAutomaton(AlphabetSpec alphabet, std::vector<std::string> input_states,
                 std::vector<std::string> output_states, std::map<std::string, FDPerm> perms,
                 std::vector<Restriction> restrictions);

  const AlphabetSpec& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& input_states() const noexcept { return inputs_; }
  const std::vector<std::string>& output_states() const noexcept { return outputs_; }

  bool has_input(std::string_view a) const;
  bool has_output(std::string_view b) const;
  std::size_t input_index(std::string_view a) const;  // throws DomainError

  const FDPerm& perm(std::string_view a) const;  // throws DomainError

  /// `a|ₓ`, or nullopt for the identity.
  std::optional<std::string> restriction(std::string_view a, const Letter& x) const;

  /// Letters where `a` restricts nontrivially, in canonical order.
  std::vector<Letter> restriction_letters(std::string_view a) const;

  /// All stored restrictions: input states in declared order, then letters
  /// in canonical order.
  std::vector<Restriction> restrictions() const;

  /// Permutations in declared input-state order, named by state.
  std::vector<NamedPerm> level_family() const;

  friend bool operator==(const GroupAutomaton&, const GroupAutomaton&) = default;

 private:
  AlphabetSpec alphabet_;
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  std::vector<FDPerm> perms_;  // parallel to inputs_
  std::vector<std::map<Letter, std::string>> restrictions_;  // parallel to inputs_
};

struct StepResult {
  Letter letter;
  std::optional<std::string> section;  // nullopt = Id

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

struct InverseStepResult {
  Letter letter;
  SignedWord section;  // empty, or a single inverted output state

  friend bool operator==(const InverseStepResult&, const InverseStepResult&) = default;
};

/// `τ(a, x)`. `a` may be `Id`. Throws DomainError for unknown states or
/// letters outside the alphabet.
StepResult step(const GroupAutomaton& aut, std::string_view a, const Letter& x);

/// Action of `a⁻¹` at `y`: returns `x = a⁻¹(y)` and the section `(a|ₓ)⁻¹`.
InverseStepResult inverse_step(const GroupAutomaton& aut, std::string_view a, const Letter& y);

struct DendroidReport {
  bool is_dendroid = false;
  bool condition1 = false;  // level permutations form a dendroid family
  bool condition2 = false;  // each output state is exactly one restriction
  bool condition3 = false;  // no restriction on infinite orbits, ≤ 1 per finite orbit
  std::vector<std::string> witnesses;
  DendroidCertificate family_certificate;
};

/// Checks the three dendroid-automaton conditions. Violations are reported,
/// never thrown.
DendroidReport validate_dendroid(const GroupAutomaton& aut);

}  // namespace dendroid
