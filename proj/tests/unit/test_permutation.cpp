#include <doctest.h>

#include <set>

#include "dendroid/models.hpp"
#include "dendroid/permutation.hpp"
#include "oracles.hpp"

using namespace dendroid;

namespace {

const AlphabetSpec kZ({"*"}, {"z"});
const Letter kStar = Letter::fin("*");
Letter z(std::int64_t i) { return Letter::ray("z", i); }

const FDPerm& g_perm() {
  static const FDPerm p = example_1mz_expz().perm("g");
  return p;
}
const FDPerm& h_perm() {
  static const FDPerm p = example_1mz_expz().perm("h");
  return p;
}

// A random valid FDPerm: a finite permutation of a window, precomposed with
// a per-ray shift. Built directly as a patch, without library composition.
FDPerm random_fdperm(oracle::Rng& rng, const AlphabetSpec& x) {
  FDPerm::RayShift shift;
  std::int64_t dmax = 0;
  for (const auto& r : x.rays()) {
    const auto d = static_cast<std::int64_t>(rng() % 5) - 2;
    if (d != 0) shift[r] = d;
    dmax = std::max(dmax, std::abs(d));
  }
  const auto w = static_cast<std::int64_t>(rng() % 4);
  auto sigma_inv = [&](const Letter& l) {
    return l.is_ray() && shift.contains(l.id()) ? l.shifted(-shift.at(l.id())) : l;
  };
  std::vector<Letter> s = window(x, w);
  std::vector<Letter> pi = s;
  std::shuffle(pi.begin(), pi.end(), rng);
  FDPerm::Patch patch;
  for (std::size_t i = 0; i < s.size(); ++i) patch.emplace(sigma_inv(s[i]), pi[i]);
  return FDPerm(x, std::move(patch), shift, w + dmax);
}

AlphabetSpec random_alphabet(oracle::Rng& rng) {
  std::vector<std::string> fin;
  const std::size_t nf = rng() % 3;
  for (std::size_t i = 0; i < nf; ++i) fin.push_back("f" + std::to_string(i));
  std::vector<std::string> rays{"r"};
  if (rng() % 2) rays.push_back("s");
  return AlphabetSpec(fin, rays);
}

// The total map patch-else-shift, evaluated without the library.
Letter naive_apply(const FDPerm::Patch& patch, const FDPerm::RayShift& shift, const Letter& x) {
  if (auto it = patch.find(x); it != patch.end()) return it->second;
  if (x.is_ray() && shift.contains(x.id())) return x.shifted(shift.at(x.id()));
  return x;
}

// Brute-force bijectivity on a window wide enough that every tail beyond it
// is a pure shift.
bool naive_bijective(const AlphabetSpec& x, const FDPerm::Patch& patch, const FDPerm::RayShift& shift,
                     std::int64_t w) {
  std::int64_t dmax = 0;
  for (const auto& [r, d] : shift) dmax = std::max(dmax, std::abs(d));
  const std::int64_t big = w + 2 * dmax + 2;
  std::set<Letter> images;
  for (const auto& l : window(x, big)) {
    if (!images.insert(naive_apply(patch, shift, l)).second) return false;
  }
  for (const auto& l : window(x, big - dmax)) {
    if (!images.contains(l)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("window enumerates letters in canonical order") {
  CHECK(window(kZ, 1) == std::vector<Letter>{kStar, z(-1), z(0), z(1)});
  CHECK(window(AlphabetSpec({"a", "b"}, {}), 5) == std::vector<Letter>{Letter::fin("a"), Letter::fin("b")});
  CHECK(window(AlphabetSpec({}, {"p", "q"}), 0) == std::vector<Letter>{Letter::ray("p", 0), Letter::ray("q", 0)});
}

TEST_CASE("window sizes nest and count") {
  const AlphabetSpec x({"a", "b", "c"}, {"p", "q"});
  for (std::int64_t r = 0; r < 6; ++r) {
    const auto small = window(x, r);
    const auto large = window(x, r + 1);
    CHECK(small.size() == 3 + 2 * (2 * static_cast<std::size_t>(r) + 1));
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}

TEST_CASE("alphabet rejects overlaps, empties and bad names") {
  CHECK_THROWS_AS(AlphabetSpec({"z"}, {"z"}), DomainError);
  CHECK_THROWS_AS(AlphabetSpec({}, {}), DomainError);
  CHECK_THROWS_AS(AlphabetSpec({"a:b"}, {}), DomainError);
  CHECK_THROWS_AS(AlphabetSpec({""}, {}), DomainError);
}

TEST_CASE("letters parse and print") {
  CHECK(kZ.parse("*") == kStar);
  CHECK(kZ.parse("z:-3") == z(-3));
  CHECK(kZ.parse("5") == z(5));
  CHECK(to_string(z(-3)) == "z:-3");
  CHECK_THROWS_AS(kZ.parse("w:1"), DomainError);
  CHECK_THROWS_AS(kZ.parse("q"), DomainError);
  CHECK(kStar < z(-100));
  CHECK(z(-1) < z(0));
}

TEST_CASE("apply on the example generators") {
  CHECK(apply(g_perm(), z(5)) == z(6));
  CHECK(apply(g_perm(), kStar) == kStar);
  CHECK(apply(h_perm(), kStar) == z(0));
  CHECK(apply(h_perm(), z(0)) == kStar);
  CHECK(apply(h_perm(), z(4)) == z(4));
  const FDPerm id = FDPerm::identity(kZ);
  for (const auto& x : window(kZ, 4)) CHECK(apply(id, x) == x);
  CHECK_THROWS_AS(apply(g_perm(), Letter::ray("w", 0)), DomainError);
}

TEST_CASE("invert on the example generators") {
  CHECK(apply(invert(g_perm()), z(6)) == z(5));
  CHECK(invert(g_perm()).shift("z") == -1);
  CHECK(invert(h_perm()) == h_perm());
  CHECK(invert(FDPerm::identity(kZ)) == FDPerm::identity(kZ));
}

TEST_CASE("orbits of the example generators") {
  const auto og = orbits(g_perm());
  REQUIRE(og.orbits.size() == 2);
  CHECK(std::get<FiniteOrbit>(og.orbits[0]).letters == std::vector<Letter>{kStar});
  const auto& inf = std::get<InfiniteOrbit>(og.orbits[1]);
  CHECK(inf.ray == "z");
  CHECK(inf.shift == 1);
  CHECK(inf.exceptional.empty());

  const auto oh = orbits(h_perm());
  REQUIRE(oh.orbits.size() == 1);
  CHECK(std::get<FiniteOrbit>(oh.orbits[0]).letters == std::vector<Letter>{kStar, z(0)});
  CHECK(oh.fixed_rays == std::vector<std::string>{"z"});

  const AlphabetSpec ab({"a", "b"}, {});
  const auto oi = orbits(FDPerm::identity(ab));
  REQUIRE(oi.orbits.size() == 2);
  CHECK(std::get<FiniteOrbit>(oi.orbits[0]).letters == std::vector<Letter>{Letter::fin("a")});
  CHECK(std::get<FiniteOrbit>(oi.orbits[1]).letters == std::vector<Letter>{Letter::fin("b")});
}

TEST_CASE("a shift by two has one infinite orbit per residue") {
  const FDPerm p(kZ, {}, {{"z", 2}}, 0);
  CHECK(orbits(p).infinite_count() == 2);
}

TEST_CASE("constructor accepts exactly the bijective patches") {
  oracle::Rng rng(11);
  int accepted = 0;
  int rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const AlphabetSpec x = random_alphabet(rng);
    FDPerm::RayShift shift;
    for (const auto& r : x.rays()) {
      const auto d = static_cast<std::int64_t>(rng() % 3) - 1;
      if (d != 0) shift[r] = d;
    }
    const std::int64_t w = 1 + static_cast<std::int64_t>(rng() % 2);
    const auto dom = window(x, w);
    FDPerm::Patch patch;
    const std::size_t entries = 1 + rng() % 4;
    for (std::size_t i = 0; i < entries; ++i) {
      const Letter from = dom[rng() % dom.size()];
      patch.insert_or_assign(from, dom[rng() % dom.size()]);
    }
    const bool expect = naive_bijective(x, patch, shift, w);
    if (expect) {
      const FDPerm p(x, patch, shift, w);
      for (const auto& l : window(x, w + 4)) CHECK(p(l) == naive_apply(patch, shift, l));
      ++accepted;
    } else {
      CHECK_THROWS_AS(FDPerm(x, patch, shift, w), DomainError);
      ++rejected;
    }
  }
  CHECK(accepted > 100);
  CHECK(rejected > 100);
}

TEST_CASE("property: invert undoes apply") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const AlphabetSpec x = random_alphabet(rng);
    const FDPerm p = random_fdperm(rng, x);
    const FDPerm q = invert(p);
    for (const auto& r : x.rays()) CHECK(q.shift(r) == -p.shift(r));
    for (const auto& l : window(x, p.window_bound() + p.max_abs_shift() + 2)) {
      CHECK(q(p(l)) == l);
      CHECK(p.preimage(p(l)) == l);
    }
  }
}

TEST_CASE("property: orbits partition the window") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const AlphabetSpec x = random_alphabet(rng);
    const FDPerm p = random_fdperm(rng, x);
    const auto dec = orbits(p);
    const std::int64_t radius = p.window_bound() + p.max_abs_shift() + 2;
    std::set<Letter> listed;
    for (const auto& o : dec.orbits) {
      if (const auto* f = std::get_if<FiniteOrbit>(&o)) {
        REQUIRE(!f->letters.empty());
        CHECK(f->letters.front() == *std::min_element(f->letters.begin(), f->letters.end()));
        for (std::size_t i = 0; i < f->letters.size(); ++i) {
          CHECK(listed.insert(f->letters[i]).second);
          CHECK(p(f->letters[i]) == f->letters[(i + 1) % f->letters.size()]);
        }
      }
    }
    for (const auto& l : window(x, radius)) {
      const auto d = orbit_of(p, l);
      if (const auto* f = std::get_if<FiniteOrbit>(&d)) {
        // A finite orbit is either listed or is an unpatched fixed ray letter.
        const bool fixed_ray = l.is_ray() && p.shift(l.id()) == 0 && f->letters == std::vector<Letter>{l};
        CHECK((listed.contains(l) || fixed_ray));
      } else {
        // Patches may splice letters of other rays into the orbit; what
        // matters is that it never closes up and escapes along a shifted ray.
        CHECK(!listed.contains(l));
        CHECK(p.shift(std::get<InfiniteOrbit>(d).ray) != 0);
        Letter y = p(l);
        for (int i = 0; i < 200 && y != l; ++i) y = p(y);
        CHECK(y != l);
      }
    }
    // Moved letters on unshifted rays lie in the patch domain.
    for (const auto& l : window(x, radius)) {
      if (l.is_ray() && p.shift(l.id()) == 0 && p(l) != l) CHECK(p.patch().contains(l));
    }
  }
}

TEST_CASE("compose matches pointwise evaluation") {
  oracle::Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const AlphabetSpec x = random_alphabet(rng);
    const FDPerm a = random_fdperm(rng, x);
    const FDPerm b = random_fdperm(rng, x);
    const FDPerm c = compose(a, b);
    const std::int64_t radius = a.window_bound() + b.window_bound() + a.max_abs_shift() + b.max_abs_shift() + 3;
    for (const auto& l : window(x, radius)) CHECK(c(l) == a(b(l)));
  }
}
