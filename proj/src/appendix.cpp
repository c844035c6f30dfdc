#include "dendroid/appendix.hpp"

#include <algorithm>
#include <stdexcept>

#include "dendroid/dot.hpp"

namespace dendroid {

SubshiftWord::SubshiftWord(std::string letters, std::int64_t lo) : letters_(std::move(letters)), lo_(lo) {
  if (letters_.empty()) throw DomainError("subshift window is empty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (kSubshiftLetters.find(letters_[i]) == std::string_view::npos) {
      throw DomainError(std::string("letter '") + letters_[i] + "' is not in {a, b, c}");
    }
    if (i > 0 && letters_[i] == letters_[i - 1]) {
      throw DomainError("adjacent repeat '" + letters_.substr(i - 1, 2) + "' at index " +
                        std::to_string(lo_ + static_cast<std::int64_t>(i) - 1));
    }
  }
}

std::optional<char> SubshiftWord::at(std::int64_t n) const {
  if (n < lo() || n > hi()) return std::nullopt;
  return letters_[static_cast<std::size_t>(n - lo_)];
}

std::vector<std::int64_t> SubshiftWord::occurrences(std::string_view factor) const {
  std::vector<std::int64_t> out;
  for (auto pos = letters_.find(factor); pos != std::string::npos; pos = letters_.find(factor, pos + 1)) {
    out.push_back(lo_ + static_cast<std::int64_t>(pos));
  }
  return out;
}

bool is_reduced(std::string_view v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (kSubshiftLetters.find(v[i]) == std::string_view::npos) return false;
    if (i > 0 && v[i] == v[i - 1]) return false;
  }
  return true;
}

std::vector<std::string> reduced_words(std::size_t max_length) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : kSubshiftLetters) {
        if (w.empty() || w.back() != c) next.push_back(w + c);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

SubshiftWord universal_word(std::size_t max_length, std::size_t margin) {
  if (max_length == 0) throw DomainError("universal word needs max length >= 1");
  std::string core;
  for (const auto& v : reduced_words(max_length)) {
    if (!core.empty() && core.back() == v.front()) core += v.front() == 'a' ? 'b' : 'a';
    core += v;
  }
  std::string left;
  char prev = core.front();
  for (std::size_t i = 0; i < margin; ++i) {
    prev = prev == 'a' ? 'b' : 'a';
    left += prev;
  }
  std::reverse(left.begin(), left.end());
  std::string right;
  prev = core.back();
  for (std::size_t i = 0; i < margin; ++i) {
    prev = prev == 'a' ? 'b' : 'a';
    right += prev;
  }
  return SubshiftWord(left + core + right, 0);
}

SubshiftWord universal_word(std::size_t max_length) { return universal_word(max_length, max_length + 2); }

WindowPerm appendix_perm(char s, const SubshiftWord& w) {
  WindowPerm p;
  p.letter = s;
  p.lo = w.lo();
  p.hi = w.hi();
  for (std::int64_t n = w.lo(); n <= w.hi(); ++n) {
    const bool up = w.at(n) == s;
    const bool down = w.at(n - 1) == s;
    if (up && down) throw std::logic_error("both moving cases apply at index " + std::to_string(n));
    p.image.push_back(up ? n + 1 : down ? n - 1 : n);
    p.reliable.push_back(up || w.at(n - 1).has_value());
  }
  return p;
}

std::optional<std::int64_t> apply_word(std::string_view v, const SubshiftWord& w, std::int64_t n) {
  for (char s : v) {
    const WindowPerm p = appendix_perm(s, w);
    if (!p.is_reliable(n)) return std::nullopt;
    n = p(n);
  }
  return n;
}

bool check_involutions(const SubshiftWord& w) {
  for (char s : kSubshiftLetters) {
    const WindowPerm p = appendix_perm(s, w);
    for (std::int64_t n = w.lo(); n <= w.hi(); ++n) {
      if (!p.is_reliable(n) || !p.is_reliable(p(n))) continue;
      if (p(p(n)) != n) return false;
    }
  }
  return true;
}

bool check_exclusivity(const SubshiftWord& w) {
  for (char s : kSubshiftLetters) {
    for (std::int64_t n = w.lo(); n <= w.hi(); ++n) {
      if (w.at(n) == s && w.at(n - 1) == s) return false;
    }
  }
  return true;
}

FaithfulnessReport check_faithful(std::size_t max_length, const SubshiftWord& w) {
  const auto words = reduced_words(max_length);
  const auto margin = static_cast<std::int64_t>(max_length) + 2;
  for (const auto& v : words) {
    const auto len = static_cast<std::int64_t>(v.size());
    const auto occ = w.occurrences(v);
    const bool ok = std::any_of(occ.begin(), occ.end(), [&](std::int64_t i) {
      return i - w.lo() >= margin && w.hi() - (i + len - 1) >= margin;
    });
    if (!ok) {
      throw DomainError("insufficient margin: '" + v + "' does not occur at least " + std::to_string(margin) +
                        " letters from both window edges");
    }
  }

  // Precompute the three involutions once.
  std::vector<WindowPerm> perms;
  for (char s : kSubshiftLetters) perms.push_back(appendix_perm(s, w));
  auto image_of = [&](std::string_view v, std::int64_t n) -> std::optional<std::int64_t> {
    for (char s : v) {
      const WindowPerm& p = perms[static_cast<std::size_t>(s - 'a')];
      if (!p.is_reliable(n)) return std::nullopt;
      n = p(n);
    }
    return n;
  };

  FaithfulnessReport report;
  for (const auto& v : words) {
    const auto len = static_cast<std::int64_t>(v.size());
    bool found = false;
    for (std::int64_t n = w.lo() + len; n <= w.hi() - len && !found; ++n) {
      if (auto m = image_of(v, n); m && *m != n) {
        report.entries.push_back({v, n, *m});
        found = true;
      }
    }
    if (!found) {
      report.faithful = false;
      report.unmoved.push_back(v);
    }
  }
  return report;
}

SegmentGraph appendix_schreier_segment(const SubshiftWord& w) {
  // Letters w_lo..w_hi pin down the 2-cycles on indices lo..hi+1; loops are
  // drawn only where both neighbouring letters are known.
  SegmentGraph g;
  g.lo = w.lo();
  g.hi = w.hi() + 1;
  for (std::int64_t n = g.lo; n <= g.hi; ++n) {
    const auto right = w.at(n);
    const auto left = w.at(n - 1);
    if (left) g.edges.push_back({n, n - 1, *left});
    if (right) g.edges.push_back({n, n + 1, *right});
    if (left && right) {
      for (char s : kSubshiftLetters) {
        if (s != *left && s != *right) g.edges.push_back({n, n, s});
      }
    }
  }
  return g;
}

std::string to_dot(const SegmentGraph& g) {
  DotWriter dot("segment", true);
  dot.add_graph_attr("rankdir=LR");
  for (std::int64_t n = g.lo; n <= g.hi; ++n) dot.add_node(std::to_string(n));
  for (const auto& e : g.edges) {
    const char* color = e.letter == 'a' ? "blue" : e.letter == 'b' ? "red" : "green";
    dot.add_edge(static_cast<std::size_t>(e.from - g.lo), static_cast<std::size_t>(e.to - g.lo),
                 std::string("label=\"") + e.letter + "\", color=" + color);
  }
  return dot.str();
}

GroupAutomaton window_automaton(const SubshiftWord& w) {
  const AlphabetSpec x({}, {"n"});
  std::map<std::string, FDPerm> perms;
  const std::int64_t bound = std::max(std::abs(w.lo()), std::abs(w.hi() + 1));
  for (char s : kSubshiftLetters) {
    FDPerm::Patch patch;
    for (std::int64_t i = w.lo(); i < w.hi(); ++i) {
      if (w.at(i) == s) {
        patch.emplace(Letter::ray("n", i), Letter::ray("n", i + 1));
        patch.emplace(Letter::ray("n", i + 1), Letter::ray("n", i));
      }
    }
    perms.emplace(std::string(1, s), FDPerm(x, std::move(patch), {}, bound));
  }
  return GroupAutomaton(x, {"a", "b", "c"}, {"a", "b", "c"}, std::move(perms), {});
}

}  // namespace dendroid
