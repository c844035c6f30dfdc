#include <doctest.h>

#include "dendroid/family.hpp"
#include "dendroid/models.hpp"
#include "oracles.hpp"

using namespace dendroid;

namespace {

const AlphabetSpec kZ({"*"}, {"z"});
Letter z(std::int64_t i) { return Letter::ray("z", i); }
Letter fin(const char* s) { return Letter::fin(s); }

std::vector<FDPerm> example_family() {
  const auto aut = example_1mz_expz();
  return {aut.perm("g"), aut.perm("h")};
}

FDPerm swap01() {
  const AlphabetSpec x({"0", "1"}, {});
  return FDPerm::from_cycles(x, {{fin("0"), fin("1")}});
}

}  // namespace

TEST_CASE("example family core graph is a path on z plus the edge to *") {
  const auto fam = example_family();
  const auto cert = is_dendroid_family(fam);
  CHECK(cert.is_dendroid);
  CHECK(cert.kind == DendroidCertificate::Kind::Tree);
  const CoreGraph& g = cert.graph;
  CHECK(g.edges.size() + 1 == g.vertices.size());
  // The h-swap * ↔ z:0 survives; its reverse edge is the deleted one.
  const auto star = g.index_of(fin("*"));
  const auto zero = g.index_of(z(0));
  bool found = false;
  for (const auto& e : g.edges) {
    if ((e.from == star && e.to == zero) || (e.from == zero && e.to == star)) found = true;
  }
  CHECK(found);
  CHECK(g.removed.size() == 1);
  // Both ends of the shifted ray are condensed.
  std::size_t tails = 0;
  for (const auto& v : g.vertices) tails += std::holds_alternative<RayTail>(v);
  CHECK(tails == 2);
}

TEST_CASE("two copies of one swap are not dendroid") {
  const std::vector<FDPerm> fam{swap01(), swap01()};
  const auto cert = is_dendroid_family(fam);
  CHECK_FALSE(cert.is_dendroid);
  CHECK(cert.kind == DendroidCertificate::Kind::Cycle);
  REQUIRE(cert.witness.size() == 2);
  CHECK(cert.graph.edges.size() == 2);
  CHECK_FALSE(cycle_diagram_oracle(fam));
  const auto cd = cycle_diagram(fam);
  CHECK(cd.vertices == 2);
  CHECK(cd.edges == 4);
  CHECK(cd.faces == 2);
  CHECK(cd.euler_characteristic() == 0);
}

TEST_CASE("identity on a singleton is a tree") {
  const AlphabetSpec x({"x"}, {});
  const std::vector<FDPerm> fam{FDPerm::identity(x)};
  const auto cert = is_dendroid_family(fam);
  CHECK(cert.is_dendroid);
  CHECK(cert.graph.vertices.size() == 1);
  CHECK(cert.graph.edges.empty());
  CHECK(cycle_diagram_oracle(fam));
}

TEST_CASE("a single n-cycle is dendroid") {
  for (std::size_t n = 1; n <= 8; ++n) {
    oracle::Table t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = (i + 1) % n;
    const auto fam = oracle::family_from_tables(n, {t});
    CHECK(is_dendroid_family(fam).is_dendroid);
    CHECK(oracle::cycle_diagram_chi(n, {t}).contractible());
  }
}

TEST_CASE("single transposition and two transpositions sharing a point") {
  const AlphabetSpec x2({"0", "1"}, {});
  CHECK(cycle_diagram_oracle(std::vector<FDPerm>{swap01()}));
  const AlphabetSpec x3({"0", "1", "2"}, {});
  const std::vector<FDPerm> fam{FDPerm::from_cycles(x3, {{fin("0"), fin("1")}}),
                                FDPerm::from_cycles(x3, {{fin("0"), fin("2")}})};
  CHECK(cycle_diagram_oracle(fam));
  CHECK(is_dendroid_family(fam).is_dendroid);
}

TEST_CASE("disconnected family carries a disconnection witness") {
  const AlphabetSpec x({"0", "1", "2", "3"}, {});
  const std::vector<FDPerm> fam{FDPerm::from_cycles(x, {{fin("0"), fin("1")}, {fin("2"), fin("3")}})};
  const auto cert = is_dendroid_family(fam);
  CHECK_FALSE(cert.is_dendroid);
  CHECK(cert.kind == DendroidCertificate::Kind::Disconnected);
  CHECK_FALSE(cert.witness.empty());
}

TEST_CASE("two generators shifting the same ray are rejected") {
  const std::vector<FDPerm> fam{FDPerm(kZ, {}, {{"z", 1}}, 0), FDPerm(kZ, {}, {{"z", -1}}, 0)};
  const auto cert = is_dendroid_family(fam);
  CHECK_FALSE(cert.is_dendroid);
  CHECK(cert.kind == DendroidCertificate::Kind::SharedTail);
}

TEST_CASE("a ray no generator shifts is rejected") {
  const std::vector<FDPerm> fam{FDPerm::identity(kZ)};
  const auto cert = is_dendroid_family(fam);
  CHECK_FALSE(cert.is_dendroid);
  CHECK(cert.kind == DendroidCertificate::Kind::FixedRay);
}

TEST_CASE("core graph names the radius it needs") {
  const auto fam = example_family();
  const auto need = auto_radius(fam);
  CHECK_THROWS_WITH_AS(core_graph(fam, need - 1),
                       doctest::Contains(("need at least " + std::to_string(need)).c_str()), DomainError);
}

TEST_CASE("a common isolated fixed point prevents dendroid") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t k = 1 + rng() % 3;
    std::vector<oracle::Table> tables;
    for (std::size_t i = 0; i < k; ++i) {
      // Keep letter 0 fixed by permuting only 1..n-1.
      oracle::Table t = oracle::random_table(rng, n - 1);
      oracle::Table full(n);
      full[0] = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) full[j + 1] = t[j] + 1;
      tables.push_back(full);
    }
    CHECK_FALSE(is_dendroid_family(oracle::family_from_tables(n, tables)).is_dendroid);
  }
}

TEST_CASE("property: agreement with the hand-counted cycle diagram") {
  oracle::Rng rng(2024);
  int yes = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t k = 1 + rng() % 3;
    std::vector<oracle::Table> tables;
    if (trial % 2 == 0) {
      tables = oracle::hypertree_tables(rng, n, k);
    } else {
      for (std::size_t i = 0; i < k; ++i) tables.push_back(oracle::random_table(rng, n));
    }
    const auto fam = oracle::family_from_tables(n, tables);
    const bool expect = oracle::cycle_diagram_chi(n, tables).contractible();
    if (trial % 2 == 0) CHECK(expect);
    CHECK(is_dendroid_family(fam).is_dendroid == expect);
    CHECK(cycle_diagram_oracle(fam) == expect);
    yes += expect;
  }
  CHECK(yes > 300);
  CHECK(yes < 600);
}

TEST_CASE("property: verdict is stable under larger radii") {
  oracle::Rng rng(77);
  auto check = [](const std::vector<FDPerm>& fam) {
    const auto named = name_family(fam);
    const auto r = auto_radius(named);
    const bool base = is_dendroid_family(named, r).is_dendroid;
    for (int k = 1; k <= 3; ++k) CHECK(is_dendroid_family(named, r + k).is_dendroid == base);
  };
  check(example_family());
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t k = 1 + rng() % 3;
    check(oracle::family_from_tables(n, oracle::hypertree_tables(rng, n, k)));
  }
  // Spliced patches along the ray: g shifts z, h swaps * with z:j.
  for (std::int64_t j = -4; j <= 4; ++j) {
    const std::vector<FDPerm> fam{FDPerm(kZ, {}, {{"z", 1}}, 0),
                                  FDPerm(kZ, {{fin("*"), z(j)}, {z(j), fin("*")}}, {}, std::abs(j))};
    check(fam);
    CHECK(is_dendroid_family(fam).is_dendroid);
  }
}

TEST_CASE("certificate DOT marks the witness cycle") {
  const std::vector<FDPerm> fam{swap01(), swap01()};
  const auto dot = to_dot(is_dendroid_family(fam));
  CHECK(dot.find("color=red, penwidth=3") != std::string::npos);
  const auto tree = to_dot(is_dendroid_family(example_family()));
  CHECK(tree.find("style=dashed") != std::string::npos);
  CHECK(tree.rfind("graph", 0) == 0);
}
