#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dendroid/automaton.hpp"

namespace dendroid {

/// Malformed automaton description. The message starts with the offending
/// field path (e.g. `restrictions[2]`) or the parser's line/column.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON text: fixed key order, states in declared order, patch and
/// restriction entries sorted, two-space indent, trailing newline.
std::string save(const GroupAutomaton& aut);

GroupAutomaton load(std::string_view text);

GroupAutomaton load_file(const std::filesystem::path& path);
void save_file(const GroupAutomaton& aut, const std::filesystem::path& path);

}  // namespace dendroid
