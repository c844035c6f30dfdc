#include "dendroid/action.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <thread>

#include "dendroid/dot.hpp"

namespace dendroid {

namespace {

bool same_states(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::set<std::string>(a.begin(), a.end()) == std::set<std::string>(b.begin(), b.end());
}

void require_states(const GroupAutomaton& aut, const SignedWord& g) {
  for (const auto& s : g.syllables) {
    if (!aut.has_input(s.state)) throw DomainError("unknown state '" + s.state + "' in word");
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Tower::Tower(std::vector<GroupAutomaton> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw DomainError("tower needs at least one level");
  for (std::size_t k = 0; k + 1 < levels_.size(); ++k) {
    if (!same_states(levels_[k].output_states(), levels_[k + 1].input_states())) {
      throw DomainError("output states of level " + std::to_string(k + 1) +
                        " do not match input states of level " + std::to_string(k + 2));
    }
  }
}

Tower Tower::autonomous(GroupAutomaton aut) {
  if (!same_states(aut.input_states(), aut.output_states())) {
    throw DomainError("autonomous tower needs equal input and output state sets");
  }
  Tower t;
  t.levels_.push_back(std::move(aut));
  t.autonomous_ = true;
  return t;
}

std::optional<std::size_t> Tower::depth() const {
  if (autonomous_) return std::nullopt;
  return levels_.size();
}

const GroupAutomaton& Tower::level(std::size_t k) const {
  if (autonomous_) return levels_.front();
  if (k >= levels_.size()) {
    throw DomainError("tower has only " + std::to_string(levels_.size()) + " levels");
  }
  return levels_[k];
}

void Tower::require_depth(std::size_t n) const {
  if (!autonomous_ && n > levels_.size()) {
    throw DomainError("word of length " + std::to_string(n) + " exceeds tower depth " +
                      std::to_string(levels_.size()));
  }
}

LevelWord parse_level_word(const Tower& tower, std::string_view text) {
  const auto tokens = split_list(text);
  tower.require_depth(tokens.size());
  LevelWord v;
  for (std::size_t k = 0; k < tokens.size(); ++k) v.push_back(tower.level(k).alphabet().parse(tokens[k]));
  return v;
}

std::pair<Letter, SignedWord> act_letter(const GroupAutomaton& aut, const SignedWord& g, const Letter& x) {
  aut.alphabet().require(x);
  Letter cur = x;
  std::vector<Syllable> pieces;
  pieces.reserve(g.size());
  // Walk factors right to left; the section of s_j lands at position j.
  std::vector<std::optional<Syllable>> at(g.size());
  for (std::size_t j = g.size(); j-- > 0;) {
    const Syllable& s = g.syllables[j];
    const FDPerm& p = aut.perm(s.state);
    if (s.exponent > 0) {
      if (auto b = aut.restriction(s.state, cur)) at[j] = Syllable{*b, 1};
      cur = p(cur);
    } else {
      cur = p.preimage(cur);
      if (auto b = aut.restriction(s.state, cur)) at[j] = Syllable{*b, -1};
    }
  }
  for (auto& s : at) {
    if (s) pieces.push_back(std::move(*s));
  }
  return {cur, reduce(SignedWord{std::move(pieces)})};
}

ActResult act_from(const Tower& tower, std::size_t first_level, const SignedWord& g, const LevelWord& v) {
  tower.require_depth(first_level + v.size());
  require_states(tower.level(first_level), g);
  ActResult out;
  out.image.reserve(v.size());
  SignedWord cur = reduce(g);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const GroupAutomaton& aut = tower.level(first_level + k);
    if (cur.empty()) {
      aut.alphabet().require(v[k]);
      out.image.push_back(v[k]);
      continue;
    }
    auto [y, section] = act_letter(aut, cur, v[k]);
    out.image.push_back(std::move(y));
    cur = std::move(section);
  }
  out.section = std::move(cur);
  return out;
}

ActResult act(const Tower& tower, const SignedWord& g, const LevelWord& v) {
  return act_from(tower, 0, g, v);
}

std::vector<Letter> nontrivial_section_letters(const GroupAutomaton& aut, const SignedWord& g) {
  require_states(aut, g);
  std::set<Letter> out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Syllable& s = g.syllables[j];
    const FDPerm& p = aut.perm(s.state);
    for (const Letter& r : aut.restriction_letters(s.state)) {
      // Letter that must reach factor j for it to hit r.
      Letter y = s.exponent > 0 ? r : p(r);
      // Undo the factors to the right of j (they act before j).
      for (std::size_t i = j + 1; i < g.size(); ++i) {
        const Syllable& t = g.syllables[i];
        const FDPerm& q = aut.perm(t.state);
        y = t.exponent > 0 ? q.preimage(y) : q(y);
      }
      out.insert(std::move(y));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::uint64_t> activity_profile(const Tower& tower, std::string_view a, std::size_t n) {
  tower.require_depth(n);
  if (!tower.level(0).has_input(a)) throw DomainError("unknown state '" + std::string(a) + "'");
  std::map<std::string, std::uint64_t> frontier{{std::string(a), 1}};
  std::vector<std::uint64_t> counts;
  counts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const GroupAutomaton& aut = tower.level(k);
    std::map<std::string, std::uint64_t> next;
    for (const auto& [s, mult] : frontier) {
      for (const auto& x : aut.restriction_letters(s)) next[*aut.restriction(s, x)] += mult;
    }
    std::uint64_t total = 0;
    for (const auto& [s, mult] : next) total += mult;
    counts.push_back(total);
    frontier = std::move(next);
  }
  return counts;
}

SectionSet section_set(const Tower& tower, const SignedWord& g, std::size_t n) {
  tower.require_depth(n);
  require_states(tower.level(0), g);
  std::set<SignedWord> all{reduce(g)};
  std::set<SignedWord> layer = all;
  bool saturated = false;
  for (std::size_t k = 0; k < n; ++k) {
    const GroupAutomaton& aut = tower.level(k);
    std::set<SignedWord> next;
    for (const auto& w : layer) {
      if (w.empty()) {
        next.insert(w);
        continue;
      }
      std::vector<Letter> letters = aut.alphabet().is_finite() ? window(aut.alphabet(), 0)
                                                               : nontrivial_section_letters(aut, w);
      // Off the candidate letters every section is trivial, and an infinite
      // alphabet always has such letters.
      if (!aut.alphabet().is_finite()) next.insert(SignedWord{});
      for (const auto& x : letters) next.insert(act_letter(aut, w, x).second);
    }
    saturated = std::includes(all.begin(), all.end(), next.begin(), next.end());
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return SectionSet{{all.begin(), all.end()}, saturated};
}

std::string to_string(const PairLetter& xy) { return to_string(xy.first) + "," + to_string(xy.second); }

ProductAutomaton::ProductAutomaton(GroupAutomaton outer, GroupAutomaton inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!same_states(outer_.output_states(), inner_.input_states())) {
    throw DomainError("product needs the outer automaton's output states to be the inner input states");
  }
}

ProductAutomaton::Step ProductAutomaton::step(std::string_view c, const PairLetter& xy) const {
  const StepResult first = dendroid::step(outer_, c, xy.first);
  const std::string_view mid = first.section ? std::string_view(*first.section) : kIdentity;
  const StepResult second = dendroid::step(inner_, mid, xy.second);
  return Step{PairLetter{first.letter, second.letter}, second.section};
}

ProductAutomaton product(const GroupAutomaton& outer, const GroupAutomaton& inner) {
  return ProductAutomaton(outer, inner);
}

std::optional<std::size_t> SchreierBall::find(const LevelWord& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

SchreierBall schreier_ball(const Tower& tower, const LevelWord& center, std::size_t radius) {
  tower.require_depth(center.size());
  for (std::size_t k = 0; k < center.size(); ++k) tower.level(k).alphabet().require(center[k]);
  SchreierBall ball;
  ball.center = center;
  ball.radius = radius;
  ball.generators = tower.level(0).input_states();

  std::vector<SignedWord> moves;
  for (const auto& s : ball.generators) {
    moves.push_back(SignedWord::generator(s, 1));
    moves.push_back(SignedWord::generator(s, -1));
  }
  std::map<LevelWord, std::size_t> dist{{center, 0}};
  std::queue<LevelWord> q;
  q.push(center);
  while (!q.empty()) {
    LevelWord v = std::move(q.front());
    q.pop();
    const std::size_t d = dist.at(v);
    if (d == radius) continue;
    for (const auto& m : moves) {
      LevelWord w = act(tower, m, v).image;
      if (dist.emplace(w, d + 1).second) q.push(std::move(w));
    }
  }
  std::vector<std::pair<std::size_t, LevelWord>> order;
  for (auto& [v, d] : dist) order.emplace_back(d, v);
  std::sort(order.begin(), order.end());
  std::map<LevelWord, std::size_t> index;
  for (auto& [d, v] : order) {
    index.emplace(v, ball.vertices.size());
    ball.vertices.push_back(v);
    ball.distance.push_back(d);
  }
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    for (std::size_t s = 0; s < ball.generators.size(); ++s) {
      const LevelWord w = act(tower, moves[2 * s], ball.vertices[i]).image;
      if (auto it = index.find(w); it != index.end()) ball.edges.push_back({i, it->second, s});
    }
  }
  return ball;
}

std::string to_dot(const SchreierBall& ball) {
  DotWriter dot("schreier", true);
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    dot.add_node(to_string(ball.vertices[i]), ball.vertices[i] == ball.center ? "shape=doublecircle" : "");
  }
  for (const auto& e : ball.edges) {
    dot.add_edge(e.from, e.to,
                 "label=" + dot_quote(ball.generators[e.generator]) + ", color=\"" +
                     std::string(generator_color(e.generator)) + "\"");
  }
  return dot.str();
}

double WalkStats::estimate(std::size_t k) const {
  return static_cast<double>(returns.at(k - 1)) / static_cast<double>(trials);
}

double WalkStats::standard_error(std::size_t k) const {
  const double p = estimate(k);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ trial);
}

WalkStats walk_return_stats(const Tower& tower, const LevelWord& start, std::size_t steps,
                            std::uint64_t trials, std::uint64_t seed) {
  if (steps % 2 != 0) throw DomainError("number of steps must be even");
  if (trials == 0) throw DomainError("need at least one trial");
  tower.require_depth(start.size());
  for (std::size_t k = 0; k < start.size(); ++k) tower.level(k).alphabet().require(start[k]);

  std::vector<SignedWord> moves;
  for (const auto& s : tower.level(0).input_states()) {
    moves.push_back(SignedWord::generator(s, 1));
    moves.push_back(SignedWord::generator(s, -1));
  }
  const std::size_t half = steps / 2;

  auto run_range = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts) {
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    for (std::uint64_t t = begin; t < end; ++t) {
      std::mt19937_64 rng(trial_seed(seed, t));
      LevelWord v = start;
      for (std::size_t s = 1; s <= steps; ++s) {
        v = act(tower, moves[pick(rng)], v).image;
        if (s % 2 == 0 && v == start) ++counts[s / 2 - 1];
      }
    }
  };

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(1, trials / 1024));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(half, 0));
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t b = trials * w / workers;
      const std::uint64_t e = trials * (w + 1) / workers;
      pool.emplace_back([&, b, e, w] { run_range(b, e, partial[w]); });
    }
  }
  WalkStats stats;
  stats.trials = trials;
  stats.returns.assign(half, 0);
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < half; ++k) stats.returns[k] += p[k];
  }
  return stats;
}

}  // namespace dendroid
