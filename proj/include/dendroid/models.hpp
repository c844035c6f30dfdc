#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dendroid/automaton.hpp"

namespace dendroid {

/// Dendroid automaton of the monodromy of `(1 - z) e^z`: alphabet
/// `{*} ∪ z`, states `g, h`, with
///
///     τ(g, z:i) = (z:i+1, Id)    τ(g, *)   = (*, h)
///     τ(h, *)   = (z:0, g)       τ(h, z:0) = (*, Id)
///
/// and every other pair fixed with trivial restriction.
GroupAutomaton example_1mz_expz();

/// Binary adding machine on `{0, 1}`: `a(0) = 1` with trivial section,
/// `a(1) = 0` with section `a`.
GroupAutomaton binary_odometer();

/// Built-in models by name: `example`, `odometer`.
std::optional<GroupAutomaton> builtin_model(std::string_view name);
std::vector<std::string> builtin_model_names();

}  // namespace dendroid
