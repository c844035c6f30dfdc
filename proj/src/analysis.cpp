#include "dendroid/analysis.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace dendroid {

namespace {

void require_states(const GroupAutomaton& aut, const SignedWord& w) {
  for (const auto& s : w.syllables) {
    if (!aut.has_input(s.state)) throw DomainError("unknown state '" + s.state + "' in word");
  }
}

Letter evaluate(const GroupAutomaton& aut, const SignedWord& w, Letter x) {
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
    const FDPerm& p = aut.perm(it->state);
    x = it->exponent > 0 ? p(x) : p.preimage(x);
  }
  return x;
}

bool same_map(const FDPerm& a, const FDPerm& b) {
  return a.patch() == b.patch() && a.ray_shift() == b.ray_shift();
}

Letter distinguishing_letter(const FDPerm& a, const FDPerm& b) {
  const std::int64_t w = std::max(a.window_bound(), b.window_bound());
  for (const auto& x : window(a.alphabet(), w)) {
    if (a(x) != b(x)) return x;
  }
  for (const auto& r : a.alphabet().rays()) {
    if (a.shift(r) != b.shift(r)) return Letter::ray(r, w + 1);
  }
  throw std::logic_error("permutations agree everywhere");
}

class BoundedComparer {
 public:
  explicit BoundedComparer(const Tower& tower) : tower_(tower) {}

  BoundedEquality run(std::size_t level, const SignedWord& u1, const SignedWord& u2, std::size_t depth) {
    if (depth == 0 || u1 == u2) return {};
    auto key = std::make_tuple(level, u1, u2, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const GroupAutomaton& aut = tower_.level(level);
    BoundedEquality out;
    const FDPerm p1 = level_permutation(aut, u1);
    const FDPerm p2 = level_permutation(aut, u2);
    if (!same_map(p1, p2)) {
      out.equal = false;
      out.witness = {distinguishing_letter(p1, p2)};
    } else {
      std::set<Letter> letters;
      for (const auto& x : nontrivial_section_letters(aut, u1)) letters.insert(x);
      for (const auto& x : nontrivial_section_letters(aut, u2)) letters.insert(x);
      for (const auto& x : letters) {
        const SignedWord s1 = act_letter(aut, u1, x).second;
        const SignedWord s2 = act_letter(aut, u2, x).second;
        BoundedEquality sub = run(level + 1, s1, s2, depth - 1);
        if (!sub.equal) {
          out.equal = false;
          out.witness = {x};
          out.witness.insert(out.witness.end(), sub.witness.begin(), sub.witness.end());
          break;
        }
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  const Tower& tower_;
  std::map<std::tuple<std::size_t, SignedWord, SignedWord, std::size_t>, BoundedEquality> memo_;
};

}  // namespace

std::vector<std::string> infinite_generators(const GroupAutomaton& aut) {
  std::vector<std::string> out;
  for (const auto& a : aut.input_states()) {
    if (orbits(aut.perm(a)).infinite_count() > 0) out.push_back(a);
  }
  return out;
}

TranslationVector translation_vector(const GroupAutomaton& aut, const SignedWord& w) {
  require_states(aut, w);
  TranslationVector phi;
  for (const auto& j : infinite_generators(aut)) phi[j] = exponent_sum(w, j);
  return phi;
}

FDPerm level_permutation(const GroupAutomaton& aut, const SignedWord& w) {
  require_states(aut, w);
  FDPerm acc = FDPerm::identity(aut.alphabet());
  for (const auto& s : w.syllables) {
    const FDPerm& p = aut.perm(s.state);
    acc = compose(acc, s.exponent > 0 ? p : invert(p));
  }
  return acc;
}

std::int64_t required_support_radius(const GroupAutomaton& aut, const SignedWord& w) {
  require_states(aut, w);
  std::vector<NamedPerm> involved;
  std::set<std::string> seen;
  std::int64_t max_window = 0;
  std::int64_t drift = 0;
  for (const auto& s : w.syllables) {
    const FDPerm& p = aut.perm(s.state);
    drift += p.max_abs_shift();
    max_window = std::max(max_window, p.window_bound());
    if (seen.insert(s.state).second) involved.push_back({s.state, p});
  }
  const std::int64_t base = involved.empty() ? 0 : auto_radius(involved);
  return std::max(base + static_cast<std::int64_t>(w.size()), max_window + drift);
}

Support support(const GroupAutomaton& aut, const SignedWord& w, std::int64_t radius) {
  if (const std::int64_t need = required_support_radius(aut, w); radius < need) {
    throw DomainError("window radius " + std::to_string(radius) + " below required bound " +
                      std::to_string(need));
  }
  Support out;
  for (const auto& r : aut.alphabet().rays()) {
    std::int64_t net = 0;
    for (const auto& s : w.syllables) net += s.exponent * aut.perm(s.state).shift(r);
    if (net != 0) {
      out.kind = Support::Kind::TailShift;
      out.ray = r;
      out.shift = net;
      return out;
    }
  }
  for (const auto& x : window(aut.alphabet(), radius)) {
    if (evaluate(aut, w, x) != x) out.moved.push_back(x);
  }
  return out;
}

Support support(const GroupAutomaton& aut, const SignedWord& w) {
  return support(aut, w, required_support_radius(aut, w));
}

BoundedEquality bounded_equal(const Tower& tower, const SignedWord& w1, const SignedWord& w2,
                              std::size_t depth) {
  tower.require_depth(depth);
  require_states(tower.level(0), w1);
  require_states(tower.level(0), w2);
  return BoundedComparer(tower).run(0, reduce(w1), reduce(w2), depth);
}

}  // namespace dendroid
