#include "dendroid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "dendroid/action.hpp"
#include "dendroid/analysis.hpp"
#include "dendroid/appendix.hpp"
#include "dendroid/models.hpp"
#include "dendroid/serialize.hpp"

namespace dendroid {

namespace {

using Json = nlohmann::ordered_json;

// Failures that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model = "example";
  std::optional<std::size_t> level;
  std::string center;
  std::optional<std::int64_t> radius;
  std::size_t steps = 2;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string dot;
  bool json = false;
  std::string generator;
  std::string word;
  std::size_t length = 4;
  std::optional<std::size_t> margin;
};

GroupAutomaton load_model(const std::string& name_or_path) {
  if (auto m = builtin_model(name_or_path)) return *m;
  try {
    return load_file(name_or_path);
  } catch (const SchemaError& e) {
    throw UsageError(std::string("cannot load model '") + name_or_path + "': " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!f) throw UsageError("write failed for '" + path + "'");
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

Json letters_json(const std::vector<Letter>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_validate(const Options& o, std::ostream& out) {
  const GroupAutomaton aut = load_model(o.model);
  const DendroidReport r = validate_dendroid(aut);
  if (!o.dot.empty()) write_file(o.dot, to_dot(r.family_certificate));
  if (o.json) {
    Json j;
    j["model"] = o.model;
    j["is_dendroid"] = r.is_dendroid;
    j["condition1"] = r.condition1;
    j["condition2"] = r.condition2;
    j["condition3"] = r.condition3;
    j["certificate"] = {{"kind", std::string(to_string(r.family_certificate.kind))},
                        {"reason", r.family_certificate.reason}};
    j["witnesses"] = r.witnesses;
    out << j.dump(2) << '\n';
  } else {
    out << "model: " << o.model << '\n'
        << "is_dendroid: " << yes_no(r.is_dendroid) << '\n'
        << "condition1 (level permutations dendroid): " << yes_no(r.condition1) << '\n'
        << "condition2 (each output state restricted once): " << yes_no(r.condition2) << '\n'
        << "condition3 (restrictions off infinite orbits, one per finite orbit): " << yes_no(r.condition3)
        << '\n'
        << "certificate: " << to_string(r.family_certificate.kind);
    if (!r.family_certificate.reason.empty()) out << " (" << r.family_certificate.reason << ')';
    out << '\n';
    for (const auto& w : r.witnesses) out << "witness: " << w << '\n';
  }
  return r.is_dendroid ? kExitOk : kExitInvalid;
}

int cmd_act(const Options& o, std::ostream& out) {
  const Tower tower = Tower::autonomous(load_model(o.model));
  const SignedWord g = parse_signed_word(o.generator);
  const LevelWord v = parse_level_word(tower, o.word);
  const ActResult r = act(tower, g, v);
  if (o.json) {
    out << Json{{"image", letters_json(r.image)}, {"section", to_string(r.section)}}.dump(2) << '\n';
  } else {
    out << to_string(r.image) << " | section: " << to_string(r.section) << '\n';
  }
  return kExitOk;
}

int cmd_sections(const Options& o, std::ostream& out) {
  const Tower tower = Tower::autonomous(load_model(o.model));
  const SignedWord g = parse_signed_word(o.generator);
  const SectionSet s = section_set(tower, g, o.level.value_or(1));
  if (o.json) {
    Json a = Json::array();
    for (const auto& w : s.sections) a.push_back(to_string(w));
    out << Json{{"sections", a}, {"saturated", s.saturated}}.dump(2) << '\n';
  } else {
    for (const auto& w : s.sections) out << to_string(w) << '\n';
    out << "saturated: " << yes_no(s.saturated) << '\n';
  }
  return kExitOk;
}

int cmd_activity(const Options& o, std::ostream& out) {
  const Tower tower = Tower::autonomous(load_model(o.model));
  const auto profile = activity_profile(tower, o.generator, o.level.value_or(12));
  if (o.json) {
    out << Json{{"state", o.generator}, {"profile", profile}}.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < profile.size(); ++k) out << "level " << k + 1 << ": " << profile[k] << '\n';
  }
  return kExitOk;
}

int cmd_product(const Options& o, std::ostream& out) {
  const GroupAutomaton aut = load_model(o.model);
  const ProductAutomaton p = product(aut, aut);
  const auto parts = split_list(o.word);
  if (parts.size() != 2) throw UsageError("product expects a pair letter 'x,y'");
  const PairLetter xy{aut.alphabet().parse(parts[0]), aut.alphabet().parse(parts[1])};
  const auto s = p.step(o.generator, xy);
  const std::string section = s.section.value_or(std::string(kIdentity));
  if (o.json) {
    out << Json{{"letter", {to_string(s.letter.first), to_string(s.letter.second)}}, {"section", section}}.dump(2)
        << '\n';
  } else {
    out << to_string(s.letter) << " | section: " << section << '\n';
  }
  return kExitOk;
}

int cmd_schreier(const Options& o, std::ostream& out) {
  const Tower tower = Tower::autonomous(load_model(o.model));
  const LevelWord c = parse_level_word(tower, o.center);
  if (o.level && *o.level != c.size()) {
    throw UsageError("--center has " + std::to_string(c.size()) + " letters but --level is " +
                     std::to_string(*o.level));
  }
  const SchreierBall ball = schreier_ball(tower, c, static_cast<std::size_t>(o.radius.value_or(1)));
  if (!o.dot.empty()) write_file(o.dot, to_dot(ball));
  if (o.json) {
    Json vs = Json::array();
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      vs.push_back({{"word", to_string(ball.vertices[i])}, {"distance", ball.distance[i]}});
    }
    Json es = Json::array();
    for (const auto& e : ball.edges) {
      es.push_back({{"from", to_string(ball.vertices[e.from])},
                    {"to", to_string(ball.vertices[e.to])},
                    {"generator", ball.generators[e.generator]}});
    }
    out << Json{{"vertices", vs}, {"edges", es}}.dump(2) << '\n';
  } else {
    out << "vertices: " << ball.vertices.size() << '\n';
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      out << "  " << to_string(ball.vertices[i]) << " (distance " << ball.distance[i] << ")\n";
    }
    out << "edges: " << ball.edges.size() << '\n';
    for (const auto& e : ball.edges) {
      out << "  " << to_string(ball.vertices[e.from]) << " -" << ball.generators[e.generator] << "-> "
          << to_string(ball.vertices[e.to]) << '\n';
    }
  }
  return kExitOk;
}

int cmd_walk(const Options& o, std::ostream& out) {
  const Tower tower = Tower::autonomous(load_model(o.model));
  const LevelWord start = parse_level_word(tower, o.center);
  if (o.level && *o.level != start.size()) throw UsageError("--center length does not match --level");
  const WalkStats st = walk_return_stats(tower, start, o.steps, o.trials, o.seed);
  if (o.json) {
    Json rows = Json::array();
    for (std::size_t k = 1; k <= st.returns.size(); ++k) {
      rows.push_back({{"time", 2 * k}, {"returns", st.returns[k - 1]}});
    }
    out << Json{{"trials", st.trials}, {"seed", o.seed}, {"returns", rows}}.dump(2) << '\n';
  } else {
    out << "start: " << to_string(start) << "  trials: " << st.trials << "  seed: " << o.seed << '\n';
    for (std::size_t k = 1; k <= st.returns.size(); ++k) {
      out << "p_" << 2 * k << " = " << fixed(st.estimate(k), 6) << " +/- " << fixed(st.standard_error(k), 6)
          << " (" << st.returns[k - 1] << " returns)\n";
    }
  }
  return kExitOk;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const GroupAutomaton aut = load_model(o.model);
  const TranslationVector phi = translation_vector(aut, parse_signed_word(o.generator));
  if (o.json) {
    Json j = Json::object();
    for (const auto& [k, v] : phi) j[k] = v;
    out << j.dump(2) << '\n';
  } else {
    if (phi.empty()) out << "(no infinite generators)\n";
    for (const auto& [k, v] : phi) out << k << ": " << v << '\n';
  }
  return kExitOk;
}

int cmd_support(const Options& o, std::ostream& out) {
  const GroupAutomaton aut = load_model(o.model);
  const SignedWord w = parse_signed_word(o.generator);
  const Support s = o.radius ? support(aut, w, *o.radius) : support(aut, w);
  const bool finite = s.kind == Support::Kind::Finite;
  if (o.json) {
    Json j{{"kind", finite ? "finite" : "tail_shift"}};
    if (finite) {
      j["moved"] = letters_json(s.moved);
    } else {
      j["ray"] = s.ray;
      j["shift"] = s.shift;
    }
    out << j.dump(2) << '\n';
  } else if (finite) {
    out << "finite support (" << s.moved.size() << "):";
    for (const auto& x : s.moved) out << ' ' << to_string(x);
    out << '\n';
  } else {
    out << "tail shift on " << s.ray << ": " << (s.shift > 0 ? "+" : "") << s.shift << '\n';
  }
  return kExitOk;
}

int cmd_appendix(const Options& o, std::ostream& out) {
  const SubshiftWord w = o.margin ? universal_word(o.length, *o.margin) : universal_word(o.length);
  const bool inv = check_involutions(w);
  const bool excl = check_exclusivity(w);
  const FaithfulnessReport r = check_faithful(o.length, w);
  if (!o.dot.empty()) write_file(o.dot, to_dot(appendix_schreier_segment(w)));
  const bool ok = inv && excl && r.faithful;
  if (o.json) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back({{"word", e.word}, {"moved", e.moved}, {"image", e.image}});
    out << Json{{"length", o.length},
                {"window", w.letters()},
                {"involution", inv},
                {"exclusivity", excl},
                {"faithful", r.faithful},
                {"entries", entries},
                {"unmoved", r.unmoved}}
               .dump(2)
        << '\n';
  } else {
    out << "window: " << w.size() << " letters [" << w.lo() << ", " << w.hi() << "]\n"
        << "involution: " << yes_no(inv) << '\n'
        << "exclusivity: " << yes_no(excl) << '\n'
        << "faithful: " << yes_no(r.faithful) << " (" << r.entries.size() << " of "
        << r.entries.size() + r.unmoved.size() << " reduced words move an interior index)\n";
    for (const auto& v : r.unmoved) out << "unmoved: " << v << '\n';
  }
  return ok ? kExitOk : kExitInvalid;
}

int cmd_examples(const Options& o, std::ostream& out, bool model_given) {
  if (model_given) {
    out << save(load_model(o.model));
    return kExitOk;
  }
  for (const auto& n : builtin_model_names()) out << n << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dendroid automata toolkit"};
  app.name("dendroid");
  app.require_subcommand(1);
  Options o;

  auto model = [&](CLI::App* s) { return s->add_option("--model", o.model, "built-in name or JSON path"); };
  auto json = [&](CLI::App* s) { s->add_flag("--json", o.json, "machine-readable output"); };
  auto dot = [&](CLI::App* s) { s->add_option("--dot", o.dot, "write a DOT graph to this path"); };

  auto* validate = app.add_subcommand("validate", "check the three dendroid conditions");
  model(validate);
  json(validate);
  dot(validate);

  auto* actc = app.add_subcommand("act", "apply a group element to a level word");
  model(actc);
  json(actc);
  actc->add_option("-g", o.generator, "signed word, e.g. g,h^-1")->required();
  actc->add_option("-w", o.word, "level word, e.g. *,z:0")->required();

  auto* sections = app.add_subcommand("sections", "distinct sections up to a level");
  model(sections);
  json(sections);
  sections->add_option("-g", o.generator, "signed word")->required();
  sections->add_option("--level", o.level, "depth");

  auto* activity = app.add_subcommand("activity", "nontrivial sections per level");
  model(activity);
  json(activity);
  activity->add_option("-g", o.generator, "input state")->required();
  activity->add_option("--level", o.level, "number of levels (default 12)");

  auto* prod = app.add_subcommand("product", "one step of the product of a model with itself");
  model(prod);
  json(prod);
  prod->add_option("-g", o.generator, "input state")->required();
  prod->add_option("-w", o.word, "pair letter x,y")->required();

  auto* schreier = app.add_subcommand("schreier", "ball in the Schreier graph of a level");
  model(schreier);
  json(schreier);
  dot(schreier);
  schreier->add_option("--level", o.level, "level (must match --center)");
  schreier->add_option("--center", o.center, "center word")->required();
  schreier->add_option("--radius", o.radius, "ball radius (default 1)")->check(CLI::NonNegativeNumber);

  auto* walk = app.add_subcommand("walk", "Monte-Carlo return probabilities");
  model(walk);
  json(walk);
  walk->add_option("--level", o.level, "level (must match --center)");
  walk->add_option("--center", o.center, "start word")->required();
  walk->add_option("--steps", o.steps, "walk length T (even)");
  walk->add_option("--trials", o.trials, "number of walks")->check(CLI::PositiveNumber);
  walk->add_option("--seed", o.seed, "random seed");

  auto* phi = app.add_subcommand("phi", "translation vector of a signed word");
  model(phi);
  json(phi);
  phi->add_option("-g", o.generator, "signed word")->required();

  auto* sup = app.add_subcommand("support", "level-one support of a signed word");
  model(sup);
  json(sup);
  sup->add_option("-g", o.generator, "signed word")->required();
  sup->add_option("--radius", o.radius, "window radius (default: smallest admissible)");

  auto* appendix = app.add_subcommand("appendix", "faithfulness checks for the C2*C2*C2 action on Z");
  json(appendix);
  dot(appendix);
  appendix->add_option("--length", o.length, "maximal reduced word length")->check(CLI::PositiveNumber);
  appendix->add_option("--margin", o.margin, "padding on each side (default length+2)");

  auto* examples = app.add_subcommand("examples", "list built-in models, or print one as JSON");
  auto* example_model = model(examples);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (actc->parsed()) return cmd_act(o, out);
    if (sections->parsed()) return cmd_sections(o, out);
    if (activity->parsed()) return cmd_activity(o, out);
    if (prod->parsed()) return cmd_product(o, out);
    if (schreier->parsed()) return cmd_schreier(o, out);
    if (walk->parsed()) return cmd_walk(o, out);
    if (phi->parsed()) return cmd_phi(o, out);
    if (sup->parsed()) return cmd_support(o, out);
    if (appendix->parsed()) return cmd_appendix(o, out);
    if (examples->parsed()) return cmd_examples(o, out, example_model->count() > 0);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dendroid
