#include "dendroid/permutation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dendroid {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

// Forward orbit from here on is a pure shift that never returns.
bool escapes_forward(const FDPerm& p, const Letter& y) {
  if (!y.is_ray()) return false;
  const std::int64_t d = p.shift(y.id());
  return d != 0 && std::abs(y.index()) > p.window_bound() && sign(y.index()) == sign(d);
}

bool escapes_backward(const FDPerm& p, const Letter& y) {
  if (!y.is_ray()) return false;
  const std::int64_t d = p.shift(y.id());
  return d != 0 && std::abs(y.index()) > p.window_bound() && sign(y.index()) == -sign(d);
}

RayTail tail_of(const FDPerm& p, const Letter& y) {
  const std::int64_t d = p.shift(y.id());
  const std::int64_t m = std::abs(d);
  return RayTail{y.id(), sign(y.index()), floor_mod(y.index(), m), m};
}

// Upper bound on the length of any finite stretch of an orbit.
std::size_t step_budget(const FDPerm& p) {
  const auto& a = p.alphabet();
  return a.fin_letters().size() +
         a.rays().size() * static_cast<std::size_t>(2 * (p.window_bound() + p.max_abs_shift()) + 3) + 4;
}

InfiniteOrbit orbit_from_sink(const FDPerm& p, const RayTail& sink) {
  const std::int64_t d = p.shift(sink.ray);
  const std::int64_t m = std::abs(d);
  // First letter past the window on the sink side with the right residue.
  std::int64_t start = sink.end * (p.window_bound() + 1);
  while (floor_mod(start, m) != sink.residue) start += sink.end;
  Letter y = Letter::ray(sink.ray, start);

  InfiniteOrbit orbit;
  orbit.ray = sink.ray;
  orbit.shift = d;
  orbit.sink = sink;
  const std::size_t budget = step_budget(p);
  std::vector<Letter> stretch;
  for (std::size_t steps = 0;; ++steps) {
    if (steps > budget) throw std::logic_error("orbit walk exceeded its step budget");
    y = p.preimage(y);
    if (escapes_backward(p, y)) {
      orbit.source = tail_of(p, y);
      break;
    }
    stretch.push_back(y);
  }
  std::reverse(stretch.begin(), stretch.end());
  for (const auto& x : stretch) {
    if (p.patch().contains(x) || p.inverse_patch().contains(x)) orbit.exceptional.push_back(x);
  }
  return orbit;
}

}  // namespace

FDPerm::FDPerm(AlphabetSpec alphabet, Patch patch, RayShift ray_shift, std::int64_t window_bound)
    : alphabet_(std::move(alphabet)), window_(window_bound) {
  if (window_bound < 0) throw DomainError("window bound must be nonnegative");
  for (const auto& [ray, d] : ray_shift) {
    if (!alphabet_.has_ray(ray)) throw DomainError("shift names unknown ray '" + ray + "'");
    if (d != 0) shift_.emplace(ray, d);
  }
  std::set<Letter> images;
  std::set<Letter> base_images;
  for (const auto& [x, y] : patch) {
    alphabet_.require(x);
    alphabet_.require(y);
    for (const Letter* l : {&x, &y}) {
      if (l->is_ray() && std::abs(l->index()) > window_) {
        throw DomainError("patch letter '" + to_string(*l) + "' lies outside window bound " +
                          std::to_string(window_));
      }
    }
    if (!images.insert(y).second) {
      throw DomainError("patch is not injective: '" + to_string(y) + "' has two preimages");
    }
    base_images.insert(base(x));
  }
  if (images != base_images) {
    throw DomainError("patch image does not match the shifted patch domain; map is not a bijection");
  }
  for (auto& [x, y] : patch) {
    if (y != base(x)) {
      patch_.emplace(x, y);
      inverse_.emplace(y, x);
    }
  }
}

FDPerm FDPerm::identity(AlphabetSpec alphabet) { return FDPerm(std::move(alphabet), {}, {}, 0); }

FDPerm FDPerm::from_cycles(AlphabetSpec alphabet, const std::vector<std::vector<Letter>>& cycles,
                           RayShift ray_shift) {
  Patch patch;
  std::int64_t w = 0;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!patch.emplace(c[i], c[(i + 1) % c.size()]).second) {
        throw DomainError("letter '" + to_string(c[i]) + "' appears in two cycles");
      }
      if (c[i].is_ray()) w = std::max(w, std::abs(c[i].index()));
    }
  }
  return FDPerm(std::move(alphabet), std::move(patch), std::move(ray_shift), w);
}

std::int64_t FDPerm::shift(const std::string& ray) const {
  auto it = shift_.find(ray);
  return it == shift_.end() ? 0 : it->second;
}

std::int64_t FDPerm::max_abs_shift() const {
  std::int64_t m = 0;
  for (const auto& [r, d] : shift_) m = std::max(m, std::abs(d));
  return m;
}

Letter FDPerm::base(const Letter& x) const {
  return x.is_fin() ? x : x.shifted(shift(x.id()));
}

Letter FDPerm::base_inverse(const Letter& x) const {
  return x.is_fin() ? x : x.shifted(-shift(x.id()));
}

Letter FDPerm::operator()(const Letter& x) const {
  if (auto it = patch_.find(x); it != patch_.end()) return it->second;
  return base(x);
}

Letter FDPerm::preimage(const Letter& y) const {
  // Patch images are exactly σ(D); anything else comes from σ⁻¹.
  if (auto it = inverse_.find(y); it != inverse_.end()) return it->second;
  return base_inverse(y);
}

Letter apply(const FDPerm& p, const Letter& x) {
  p.alphabet().require(x);
  return p(x);
}

FDPerm invert(const FDPerm& p) {
  FDPerm::Patch patch;
  for (const auto& [x, y] : p.patch()) patch.emplace(y, x);
  FDPerm::RayShift shift;
  for (const auto& [r, d] : p.ray_shift()) shift.emplace(r, -d);
  return FDPerm(p.alphabet(), std::move(patch), std::move(shift), p.window_bound());
}

FDPerm compose(const FDPerm& outer, const FDPerm& inner) {
  if (!(outer.alphabet() == inner.alphabet())) {
    throw DomainError("cannot compose permutations of different alphabets");
  }
  FDPerm::RayShift shift;
  for (const auto& r : outer.alphabet().rays()) shift.emplace(r, outer.shift(r) + inner.shift(r));
  // Beyond this radius neither patch is ever touched.
  const std::int64_t w =
      std::max(inner.window_bound(), outer.window_bound() + inner.max_abs_shift());
  FDPerm::Patch patch;
  for (const auto& x : window(outer.alphabet(), w)) {
    const Letter y = outer(inner(x));
    const Letter b = x.is_fin() ? x : x.shifted(shift[x.id()]);
    if (y != b) patch.emplace(x, y);
  }
  // Images of patched letters may sit just outside w; widen accordingly.
  std::int64_t bound = w;
  for (const auto& [x, y] : patch) {
    if (y.is_ray()) bound = std::max(bound, std::abs(y.index()));
  }
  return FDPerm(outer.alphabet(), std::move(patch), std::move(shift), bound);
}

std::string to_string(const RayTail& t) {
  std::string s = t.ray + (t.end > 0 ? ":+inf" : ":-inf");
  if (t.modulus > 1) s += "[" + std::to_string(t.residue) + "]";
  return s;
}

std::size_t OrbitDecomposition::finite_count() const {
  return static_cast<std::size_t>(std::count_if(orbits.begin(), orbits.end(), [](const auto& o) {
    return std::holds_alternative<FiniteOrbit>(o);
  }));
}

std::size_t OrbitDecomposition::infinite_count() const { return orbits.size() - finite_count(); }

OrbitDescriptor orbit_of(const FDPerm& p, const Letter& x) {
  p.alphabet().require(x);
  std::vector<Letter> cycle{x};
  Letter y = p(x);
  const std::size_t budget = step_budget(p);
  for (std::size_t steps = 0; y != x; ++steps) {
    if (escapes_forward(p, y)) return orbit_from_sink(p, tail_of(p, y));
    if (steps > budget) throw std::logic_error("orbit walk exceeded its step budget");
    cycle.push_back(y);
    y = p(y);
  }
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return FiniteOrbit{std::move(cycle)};
}

OrbitDecomposition orbits(const FDPerm& p) {
  OrbitDecomposition out;
  std::set<Letter> seeds;
  for (const auto& f : p.alphabet().fin_letters()) seeds.insert(Letter::fin(f));
  for (const auto& [x, y] : p.patch()) {
    seeds.insert(x);
    seeds.insert(y);
  }
  std::set<Letter> covered;
  for (const auto& s : seeds) {
    if (covered.contains(s)) continue;
    auto orbit = orbit_of(p, s);
    if (auto* fin = std::get_if<FiniteOrbit>(&orbit)) {
      covered.insert(fin->letters.begin(), fin->letters.end());
      out.orbits.emplace_back(std::move(orbit));
    }
  }
  std::sort(out.orbits.begin(), out.orbits.end(), [](const auto& a, const auto& b) {
    return std::get<FiniteOrbit>(a).letters.front() < std::get<FiniteOrbit>(b).letters.front();
  });
  for (const auto& r : p.alphabet().rays()) {
    const std::int64_t d = p.shift(r);
    if (d == 0) {
      out.fixed_rays.push_back(r);
      continue;
    }
    for (std::int64_t c = 0; c < std::abs(d); ++c) {
      out.orbits.emplace_back(orbit_from_sink(p, RayTail{r, sign(d), c, std::abs(d)}));
    }
  }
  return out;
}

std::int64_t patch_extent(const FDPerm& p) {
  std::int64_t m = 0;
  for (const auto& [x, y] : p.patch()) {
    if (x.is_ray()) m = std::max(m, std::abs(x.index()));
    if (y.is_ray()) m = std::max(m, std::abs(y.index()));
  }
  return m;
}

}  // namespace dendroid
