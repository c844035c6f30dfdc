#include "dendroid/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dendroid {

namespace {

using Json = nlohmann::ordered_json;

Json perm_to_json(const FDPerm& p) {
  Json patch = Json::array();
  for (const auto& [x, y] : p.patch()) patch.push_back(Json::array({to_string(x), to_string(y)}));
  Json shift = Json::object();
  for (const auto& [r, d] : p.ray_shift()) shift[r] = d;
  return Json{{"patch", std::move(patch)}, {"ray_shift", std::move(shift)}, {"window", p.window_bound()}};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Letter letter_from(const Json& j, const AlphabetSpec& alphabet, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a letter string");
  try {
    return alphabet.parse(j.get<std::string>());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

FDPerm perm_from(const Json& j, const AlphabetSpec& alphabet, const std::string& where) {
  const Json& patch_j = field(j, "patch", where);
  if (!patch_j.is_array()) fail(where + ".patch", "expected an array of pairs");
  FDPerm::Patch patch;
  for (std::size_t i = 0; i < patch_j.size(); ++i) {
    const std::string at = where + ".patch[" + std::to_string(i) + "]";
    const Json& pair = patch_j[i];
    if (!pair.is_array() || pair.size() != 2) fail(at, "expected a [from, to] pair");
    const Letter x = letter_from(pair[0], alphabet, at + "[0]");
    if (!patch.emplace(x, letter_from(pair[1], alphabet, at + "[1]")).second) {
      fail(at, "duplicate patch entry for '" + to_string(x) + "'");
    }
  }
  FDPerm::RayShift shift;
  if (auto it = j.find("ray_shift"); it != j.end()) {
    if (!it->is_object()) fail(where + ".ray_shift", "expected an object");
    for (const auto& [r, d] : it->items()) {
      if (!d.is_number_integer()) fail(where + ".ray_shift." + r, "expected an integer");
      shift.emplace(r, d.get<std::int64_t>());
    }
  }
  const Json& w = field(j, "window", where);
  if (!w.is_number_integer()) fail(where + ".window", "expected a nonnegative integer");
  try {
    return FDPerm(alphabet, std::move(patch), std::move(shift), w.get<std::int64_t>());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

}  // namespace

std::string save(const GroupAutomaton& aut) {
  Json j;
  j["alphabet"] = Json{{"fin", aut.alphabet().fin_letters()}, {"rays", aut.alphabet().rays()}};
  j["input_states"] = aut.input_states();
  j["output_states"] = aut.output_states();
  Json perms = Json::object();
  for (const auto& a : aut.input_states()) perms[a] = perm_to_json(aut.perm(a));
  j["perms"] = std::move(perms);
  Json rs = Json::array();
  for (const auto& r : aut.restrictions()) rs.push_back(Json::array({r.input, to_string(r.letter), r.output}));
  j["restrictions"] = std::move(rs);
  return j.dump(2) + "\n";
}

GroupAutomaton load(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("parse error: ") + e.what());
  }
  if (!j.is_object()) fail("<root>", "expected an object");

  const Json& alpha_j = field(j, "alphabet", "<root>");
  std::vector<std::string> fin = string_list(field(alpha_j, "fin", "alphabet"), "alphabet.fin");
  std::vector<std::string> rays =
      alpha_j.contains("rays") ? string_list(alpha_j["rays"], "alphabet.rays") : std::vector<std::string>{};
  std::optional<AlphabetSpec> alphabet;
  try {
    alphabet.emplace(std::move(fin), std::move(rays));
  } catch (const DomainError& e) {
    fail("alphabet", e.what());
  }

  auto inputs = string_list(field(j, "input_states", "<root>"), "input_states");
  auto outputs = string_list(field(j, "output_states", "<root>"), "output_states");

  const Json& perms_j = field(j, "perms", "<root>");
  if (!perms_j.is_object()) fail("perms", "expected an object keyed by state");
  std::map<std::string, FDPerm> perms;
  for (const auto& [a, pj] : perms_j.items()) perms.emplace(a, perm_from(pj, *alphabet, "perms." + a));

  const Json& rs_j = field(j, "restrictions", "<root>");
  if (!rs_j.is_array()) fail("restrictions", "expected an array of [state, letter, state] triples");
  std::vector<GroupAutomaton::Restriction> restrictions;
  std::set<std::pair<std::string, Letter>> seen;
  for (std::size_t i = 0; i < rs_j.size(); ++i) {
    const std::string at = "restrictions[" + std::to_string(i) + "]";
    const Json& t = rs_j[i];
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[2].is_string()) {
      fail(at, "expected a [state, letter, state] triple");
    }
    GroupAutomaton::Restriction r{t[0].get<std::string>(), letter_from(t[1], *alphabet, at + "[1]"),
                                  t[2].get<std::string>()};
    if (!seen.emplace(r.input, r.letter).second) {
      fail(at, "duplicate restriction (" + r.input + ", " + to_string(r.letter) + ")");
    }
    restrictions.push_back(std::move(r));
  }

  try {
    return GroupAutomaton(std::move(*alphabet), std::move(inputs), std::move(outputs), std::move(perms),
                          std::move(restrictions));
  } catch (const DomainError& e) {
    fail("<root>", e.what());
  }
}

GroupAutomaton load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return load(ss.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void save_file(const GroupAutomaton& aut, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError(path.string() + ": cannot write file");
  out << save(aut);
}

}  // namespace dendroid
