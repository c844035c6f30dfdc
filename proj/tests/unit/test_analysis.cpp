#include <doctest.h>

#include "dendroid/analysis.hpp"
#include "dendroid/models.hpp"
#include "oracles.hpp"

using namespace dendroid;

namespace {

const Letter kStar = Letter::fin("*");
Letter z(std::int64_t i) { return Letter::ray("z", i); }
SignedWord w(const char* s) { return parse_signed_word(s); }

const GroupAutomaton& ex() {
  static const GroupAutomaton a = example_1mz_expz();
  return a;
}
const Tower& ext() {
  static const Tower t = Tower::autonomous(ex());
  return t;
}

// Two rays, each shifted by its own generator.
GroupAutomaton two_ray_automaton() {
  const AlphabetSpec x({}, {"p", "q"});
  FDPerm a(x, {}, {{"p", 1}}, 0);
  FDPerm b(x, {}, {{"q", -1}}, 0);
  return GroupAutomaton(x, {"a", "b"}, {"a", "b"}, {{"a", a}, {"b", b}}, {});
}

}  // namespace

TEST_CASE("infinite generators") {
  CHECK(infinite_generators(ex()) == std::vector<std::string>{"g"});
  CHECK(infinite_generators(binary_odometer()).empty());
  CHECK(infinite_generators(two_ray_automaton()) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("translation vectors") {
  CHECK(translation_vector(ex(), w("g,h,g^-1,h")) == TranslationVector{{"g", 0}});
  CHECK(translation_vector(ex(), w("g,g,h")) == TranslationVector{{"g", 2}});
  CHECK(translation_vector(ex(), SignedWord{}) == TranslationVector{{"g", 0}});
  CHECK_THROWS_AS(translation_vector(ex(), w("k")), DomainError);
}

TEST_CASE("support on the example") {
  const auto s = support(ex(), w("g,h,g^-1,h"));
  CHECK(s.kind == Support::Kind::Finite);
  CHECK(s.moved == std::vector<Letter>{kStar, z(0), z(1)});
  const auto t = support(ex(), w("g"));
  CHECK(t.kind == Support::Kind::TailShift);
  CHECK(t.ray == "z");
  CHECK(t.shift == 1);
  const auto e = support(ex(), SignedWord{}, 10);
  CHECK(e.kind == Support::Kind::Finite);
  CHECK(e.moved.empty());
  const auto need = required_support_radius(ex(), w("g,h"));
  CHECK_THROWS_WITH_AS(support(ex(), w("g,h"), need - 1),
                       doctest::Contains(("required bound " + std::to_string(need)).c_str()), DomainError);
}

TEST_CASE("bounded equality") {
  CHECK(bounded_equal(ext(), w("h,h"), SignedWord{}, 1).equal);
  // h² fixes the first level but has section g at * and at z:0.
  const auto deep = bounded_equal(ext(), w("h,h"), SignedWord{}, 2);
  CHECK_FALSE(deep.equal);
  REQUIRE(deep.witness.size() == 2);
  CHECK(act(ext(), w("h,h"), deep.witness).image != deep.witness);

  const auto gh = bounded_equal(ext(), w("g"), w("h"), 1);
  CHECK_FALSE(gh.equal);
  REQUIRE(gh.witness.size() == 1);
  CHECK(act(ext(), w("g"), gh.witness).image != act(ext(), w("h"), gh.witness).image);
  CHECK(act(ext(), w("g"), {z(0)}).image != act(ext(), w("h"), {z(0)}).image);

  for (std::size_t d = 0; d <= 5; ++d) CHECK(bounded_equal(ext(), w("g,h,g"), w("g,h,g"), d).equal);
  // A free reduction is an equality at every depth.
  CHECK(bounded_equal(ext(), w("g,h,h^-1"), w("g"), 6).equal);
}

TEST_CASE("property: bounded_equal agrees with exhaustive comparison on the odometer") {
  const Tower odo = Tower::autonomous(binary_odometer());
  oracle::Rng rng(4);
  const std::vector<std::string> states{"a"};
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = oracle::random_word(rng, states, 10);
    const auto v = oracle::random_word(rng, states, 10);
    const std::size_t depth = 1 + rng() % 4;
    bool expect = true;
    for (std::size_t bits = 0; bits < (std::size_t{1} << depth); ++bits) {
      LevelWord x;
      for (std::size_t k = 0; k < depth; ++k) x.push_back(Letter::fin((bits >> k) & 1 ? "1" : "0"));
      if (oracle::image(odo, u, x) != oracle::image(odo, v, x)) expect = false;
    }
    const auto got = bounded_equal(odo, u, v, depth);
    CHECK(got.equal == expect);
    if (!got.equal) {
      CHECK(oracle::image(odo, u, got.witness) != oracle::image(odo, v, got.witness));
    }
  }
}

TEST_CASE("property: translation vector is additive") {
  oracle::Rng rng(31);
  for (const auto& aut : {ex(), two_ray_automaton()}) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto u = oracle::random_word(rng, aut.input_states(), 8);
      const auto v = oracle::random_word(rng, aut.input_states(), 8);
      const auto pu = translation_vector(aut, u);
      const auto pv = translation_vector(aut, v);
      const auto puv = translation_vector(aut, u * v);
      for (const auto& [k, val] : puv) CHECK(val == pu.at(k) + pv.at(k));
    }
  }
}

TEST_CASE("property: zero translation vector means finite support") {
  oracle::Rng rng(32);
  int zero = 0;
  for (int trial = 0; trial < 2000 && zero < 300; ++trial) {
    auto u = oracle::random_word(rng, ex().input_states(), 10);
    // Balance g-exponents so roughly half the samples lie in the kernel.
    if (trial % 2 == 0) {
      const long e = exponent_sum(u, "g");
      for (long i = 0; i < std::abs(e); ++i) u.syllables.push_back({"g", e > 0 ? -1 : 1});
    }
    const auto phi = translation_vector(ex(), u);
    const auto s = support(ex(), u);
    if (phi.at("g") == 0) {
      ++zero;
      CHECK(s.kind == Support::Kind::Finite);
      // Moved set is exact: compare against letter-by-letter evaluation on a wider window.
      std::vector<Letter> moved;
      for (const auto& x : window(ex().alphabet(), required_support_radius(ex(), u) + 5)) {
        if (act(ext(), u, {x}).image.front() != x) moved.push_back(x);
      }
      CHECK(moved == s.moved);
    } else {
      CHECK(s.kind == Support::Kind::TailShift);
      CHECK(s.shift == phi.at("g"));
    }
  }
  CHECK(zero >= 200);
}

TEST_CASE("property: different translation vectors give different level permutations") {
  oracle::Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = oracle::random_word(rng, ex().input_states(), 8);
    const auto v = oracle::random_word(rng, ex().input_states(), 8);
    if (translation_vector(ex(), u) == translation_vector(ex(), v)) continue;
    CHECK_FALSE(bounded_equal(ext(), u, v, 1).equal);
  }
}
