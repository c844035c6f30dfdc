#include "dendroid/models.hpp"

namespace dendroid {

GroupAutomaton example_1mz_expz() {
  const AlphabetSpec x({"*"}, {"z"});
  const Letter star = Letter::fin("*");
  const Letter zero = Letter::ray("z", 0);
  FDPerm g(x, {}, {{"z", 1}}, 0);
  FDPerm h(x, {{star, zero}, {zero, star}}, {}, 0);
  return GroupAutomaton(x, {"g", "h"}, {"g", "h"}, {{"g", g}, {"h", h}},
                        {{"g", star, "h"}, {"h", star, "g"}});
}

GroupAutomaton binary_odometer() {
  const AlphabetSpec x({"0", "1"}, {});
  const Letter zero = Letter::fin("0");
  const Letter one = Letter::fin("1");
  FDPerm a = FDPerm::from_cycles(x, {{zero, one}});
  return GroupAutomaton(x, {"a"}, {"a"}, {{"a", a}}, {{"a", one, "a"}});
}

std::optional<GroupAutomaton> builtin_model(std::string_view name) {
  if (name == "example") return example_1mz_expz();
  if (name == "odometer") return binary_odometer();
  return std::nullopt;
}

std::vector<std::string> builtin_model_names() { return {"example", "odometer"}; }

}  // namespace dendroid
