#include <doctest.h>

#include "dendroid/appendix.hpp"
#include "dendroid/automaton.hpp"
#include "dendroid/models.hpp"
#include "dendroid/serialize.hpp"
#include <json.hpp>
#include "oracles.hpp"

using namespace dendroid;

namespace {

const Letter kStar = Letter::fin("*");
Letter z(std::int64_t i) { return Letter::ray("z", i); }

GroupAutomaton with_restrictions(const GroupAutomaton& base, std::vector<GroupAutomaton::Restriction> rs) {
  std::map<std::string, FDPerm> perms;
  for (const auto& a : base.input_states()) perms.emplace(a, base.perm(a));
  return GroupAutomaton(base.alphabet(), base.input_states(), base.output_states(), perms, std::move(rs));
}

}  // namespace

TEST_CASE("step on the example") {
  const auto aut = example_1mz_expz();
  auto s = step(aut, "g", kStar);
  CHECK(s.letter == kStar);
  CHECK(s.section == std::optional<std::string>("h"));
  s = step(aut, "h", z(0));
  CHECK(s.letter == kStar);
  CHECK_FALSE(s.section.has_value());
  s = step(aut, kIdentity, z(7));
  CHECK(s.letter == z(7));
  CHECK_FALSE(s.section.has_value());
  CHECK_THROWS_AS(step(aut, "q", kStar), DomainError);
}

TEST_CASE("inverse_step on the example") {
  const auto aut = example_1mz_expz();
  auto s = inverse_step(aut, "h", z(0));
  CHECK(s.letter == kStar);
  CHECK(to_string(s.section) == "g^-1");
  s = inverse_step(aut, "g", z(6));
  CHECK(s.letter == z(5));
  CHECK(s.section.empty());
  s = inverse_step(aut, "g", kStar);
  CHECK(s.letter == kStar);
  CHECK(to_string(s.section) == "h^-1");
}

TEST_CASE("property: inverse_step undoes step") {
  for (const auto& aut : {example_1mz_expz(), binary_odometer()}) {
    for (const auto& a : aut.input_states()) {
      for (const auto& x : window(aut.alphabet(), 8)) {
        const auto fwd = step(aut, a, x);
        const auto back = inverse_step(aut, a, fwd.letter);
        CHECK(back.letter == x);
        const SignedWord section = fwd.section ? SignedWord::generator(*fwd.section) : SignedWord{};
        CHECK(reduce(back.section * section).empty());
      }
    }
  }
}

TEST_CASE("example automaton is dendroid") {
  const auto r = validate_dendroid(example_1mz_expz());
  CHECK(r.is_dendroid);
  CHECK(r.condition1);
  CHECK(r.condition2);
  CHECK(r.condition3);
  CHECK(r.witnesses.empty());
  CHECK(validate_dendroid(binary_odometer()).is_dendroid);
}

TEST_CASE("extra restriction (h, z:5) -> h breaks only uniqueness") {
  const auto base = example_1mz_expz();
  auto rs = base.restrictions();
  rs.push_back({"h", z(5), "h"});
  const auto r = validate_dendroid(with_restrictions(base, rs));
  CHECK_FALSE(r.is_dendroid);
  CHECK(r.condition1);
  CHECK_FALSE(r.condition2);
  CHECK(r.condition3);
}

TEST_CASE("extra restriction (g, z:3) -> h breaks uniqueness and placement") {
  // z:3 lies on the infinite g-orbit, so the placement condition fails too.
  const auto base = example_1mz_expz();
  auto rs = base.restrictions();
  rs.push_back({"g", z(3), "h"});
  const auto r = validate_dendroid(with_restrictions(base, rs));
  CHECK_FALSE(r.condition2);
  CHECK_FALSE(r.condition3);
  CHECK(r.condition1);
}

TEST_CASE("moving (g, *) -> h to (g, z:3) breaks only placement") {
  const auto base = example_1mz_expz();
  const auto r = validate_dendroid(with_restrictions(base, {{"g", z(3), "h"}, {"h", kStar, "g"}}));
  CHECK_FALSE(r.is_dendroid);
  CHECK(r.condition1);
  CHECK(r.condition2);
  CHECK_FALSE(r.condition3);
}

TEST_CASE("two restrictions on one finite orbit break placement") {
  const auto base = example_1mz_expz();
  const auto aut = GroupAutomaton(base.alphabet(), {"g", "h"}, {"g", "h", "k"},
                                  {{"g", base.perm("g")}, {"h", base.perm("h")}},
                                  {{"g", kStar, "h"}, {"h", kStar, "g"}, {"h", z(0), "k"}});
  const auto r = validate_dendroid(aut);
  CHECK(r.condition2);
  CHECK_FALSE(r.condition3);
}

TEST_CASE("a valid dendroid automaton has exactly |B| restrictions") {
  for (const auto& aut : {example_1mz_expz(), binary_odometer()}) {
    REQUIRE(validate_dendroid(aut).is_dendroid);
    CHECK(aut.restrictions().size() == aut.output_states().size());
    for (const auto& a : aut.input_states()) CHECK(aut.restriction_letters(a).size() <= 1);
  }
}

TEST_CASE("duplicate restrictions are rejected") {
  const auto base = example_1mz_expz();
  CHECK_THROWS_WITH_AS(with_restrictions(base, {{"g", kStar, "h"}, {"g", kStar, "g"}}),
                       doctest::Contains("duplicate restriction"), DomainError);
}

TEST_CASE("save is canonical and load round-trips") {
  const auto aut = example_1mz_expz();
  const std::string text = save(aut);
  CHECK(text == save(load(text)));
  CHECK(load(text) == aut);
  CHECK(text.find("\"ray_shift\"") != std::string::npos);
  CHECK(text.find("\"z:0\"") != std::string::npos);
  CHECK(load(save(binary_odometer())) == binary_odometer());
  const auto win = window_automaton(universal_word(2));
  CHECK(load(save(win)) == win);
}

TEST_CASE("load reports duplicate restrictions and schema errors with context") {
  const auto text = save(example_1mz_expz());
  auto j = nlohmann::json::parse(text);
  j["restrictions"].push_back(j["restrictions"][0]);
  CHECK_THROWS_WITH_AS(load(j.dump()), doctest::Contains("duplicate restriction"), SchemaError);

  auto k = nlohmann::json::parse(text);
  k.erase("output_states");
  CHECK_THROWS_WITH_AS(load(k.dump()), doctest::Contains("output_states"), SchemaError);

  CHECK_THROWS_WITH_AS(load("{"), doctest::Contains("parse error"), SchemaError);
}
