#include "dendroid/automaton.hpp"

#include <algorithm>
#include <set>

namespace dendroid {

namespace {

void check_states(const std::vector<std::string>& states, const char* what) {
  std::set<std::string> seen;
  for (const auto& s : states) {
    if (!is_identifier(s) || s == kIdentity) {
      throw DomainError(std::string("invalid ") + what + " state name '" + s + "'");
    }
    if (!seen.insert(s).second) throw DomainError(std::string("duplicate ") + what + " state '" + s + "'");
  }
}

}  // namespace

GroupAutomaton::GroupAutomaton(AlphabetSpec alphabet, std::vector<std::string> input_states,
                               std::vector<std::string> output_states,
                               std::map<std::string, FDPerm> perms,
                               std::vector<Restriction> restrictions)
    : alphabet_(std::move(alphabet)),
      inputs_(std::move(input_states)),
      outputs_(std::move(output_states)),
      restrictions_(inputs_.size()) {
  check_states(inputs_, "input");
  check_states(outputs_, "output");
  if (inputs_.empty()) throw DomainError("automaton has no input states");
  for (const auto& [name, p] : perms) {
    if (!has_input(name)) throw DomainError("permutation given for unknown state '" + name + "'");
  }
  perms_.reserve(inputs_.size());
  for (const auto& a : inputs_) {
    auto it = perms.find(a);
    if (it == perms.end()) throw DomainError("missing permutation for state '" + a + "'");
    if (!(it->second.alphabet() == alphabet_)) {
      throw DomainError("permutation of state '" + a + "' acts on a different alphabet");
    }
    perms_.push_back(std::move(it->second));
  }
  for (auto& r : restrictions) {
    if (!has_input(r.input)) throw DomainError("restriction from unknown state '" + r.input + "'");
    if (!has_output(r.output)) throw DomainError("restriction to unknown state '" + r.output + "'");
    alphabet_.require(r.letter);
    auto& row = restrictions_[input_index(r.input)];
    if (!row.emplace(r.letter, r.output).second) {
      throw DomainError("duplicate restriction (" + r.input + ", " + to_string(r.letter) + ")");
    }
  }
}

bool GroupAutomaton::has_input(std::string_view a) const {
  return std::find(inputs_.begin(), inputs_.end(), a) != inputs_.end();
}

bool GroupAutomaton::has_output(std::string_view b) const {
  return std::find(outputs_.begin(), outputs_.end(), b) != outputs_.end();
}

std::size_t GroupAutomaton::input_index(std::string_view a) const {
  auto it = std::find(inputs_.begin(), inputs_.end(), a);
  if (it == inputs_.end()) throw DomainError("unknown state '" + std::string(a) + "'");
  return static_cast<std::size_t>(it - inputs_.begin());
}

const FDPerm& GroupAutomaton::perm(std::string_view a) const { return perms_[input_index(a)]; }

std::optional<std::string> GroupAutomaton::restriction(std::string_view a, const Letter& x) const {
  const auto& row = restrictions_[input_index(a)];
  if (auto it = row.find(x); it != row.end()) return it->second;
  return std::nullopt;
}

std::vector<Letter> GroupAutomaton::restriction_letters(std::string_view a) const {
  std::vector<Letter> out;
  for (const auto& [x, b] : restrictions_[input_index(a)]) out.push_back(x);
  return out;
}

std::vector<GroupAutomaton::Restriction> GroupAutomaton::restrictions() const {
  std::vector<Restriction> out;
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    for (const auto& [x, b] : restrictions_[i]) out.push_back(Restriction{inputs_[i], x, b});
  }
  return out;
}

std::vector<NamedPerm> GroupAutomaton::level_family() const {
  std::vector<NamedPerm> out;
  for (std::size_t i = 0; i < inputs_.size(); ++i) out.push_back({inputs_[i], perms_[i]});
  return out;
}

StepResult step(const GroupAutomaton& aut, std::string_view a, const Letter& x) {
  aut.alphabet().require(x);
  if (a == kIdentity) return StepResult{x, std::nullopt};
  return StepResult{aut.perm(a)(x), aut.restriction(a, x)};
}

InverseStepResult inverse_step(const GroupAutomaton& aut, std::string_view a, const Letter& y) {
  aut.alphabet().require(y);
  if (a == kIdentity) return InverseStepResult{y, {}};
  const Letter x = aut.perm(a).preimage(y);
  InverseStepResult out{x, {}};
  if (auto b = aut.restriction(a, x)) out.section = SignedWord::generator(*b, -1);
  return out;
}

DendroidReport validate_dendroid(const GroupAutomaton& aut) {
  DendroidReport report;

  const auto family = aut.level_family();
  report.family_certificate = is_dendroid_family(family);
  report.condition1 = report.family_certificate.is_dendroid;
  if (!report.condition1) {
    report.witnesses.push_back("condition 1: " + report.family_certificate.reason);
  }

  std::map<std::string, std::vector<GroupAutomaton::Restriction>> by_output;
  for (const auto& b : aut.output_states()) by_output[b];
  for (const auto& r : aut.restrictions()) by_output[r.output].push_back(r);
  report.condition2 = true;
  for (const auto& b : aut.output_states()) {
    const auto& hits = by_output[b];
    if (hits.size() == 1) continue;
    report.condition2 = false;
    if (hits.empty()) {
      report.witnesses.push_back("condition 2: output state '" + b + "' is never a restriction");
    } else {
      std::string where;
      for (const auto& r : hits) {
        if (!where.empty()) where += ", ";
        where += r.input + "|" + to_string(r.letter);
      }
      report.witnesses.push_back("condition 2: output state '" + b + "' appears " +
                                 std::to_string(hits.size()) + " times (" + where + ")");
    }
  }

  report.condition3 = true;
  for (const auto& a : aut.input_states()) {
    const FDPerm& p = aut.perm(a);
    std::map<Letter, std::vector<Letter>> per_cycle;  // cycle's first letter -> restriction letters
    for (const auto& x : aut.restriction_letters(a)) {
      const auto orbit = orbit_of(p, x);
      if (std::holds_alternative<InfiniteOrbit>(orbit)) {
        report.condition3 = false;
        report.witnesses.push_back("condition 3: " + a + "|" + to_string(x) + " = " +
                                   *aut.restriction(a, x) + " lies on an infinite orbit of '" + a + "'");
      } else {
        per_cycle[std::get<FiniteOrbit>(orbit).letters.front()].push_back(x);
      }
    }
    for (const auto& [head, xs] : per_cycle) {
      if (xs.size() <= 1) continue;
      report.condition3 = false;
      std::string list;
      for (const auto& x : xs) list += (list.empty() ? "" : ", ") + to_string(x);
      report.witnesses.push_back("condition 3: '" + a + "' restricts nontrivially " +
                                 std::to_string(xs.size()) + " times on its finite orbit through " +
                                 to_string(head) + " (" + list + ")");
    }
  }

  report.is_dendroid = report.condition1 && report.condition2 && report.condition3;
  return report;
}

}  // namespace dendroid
