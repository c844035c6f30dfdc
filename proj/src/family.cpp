#include "dendroid/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "dendroid/dot.hpp"

namespace dendroid {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }
int sign(std::int64_t v) { return (v > 0) - (v < 0); }

const AlphabetSpec& shared_alphabet(std::span<const NamedPerm> family) {
  if (family.empty()) throw DomainError("empty permutation family");
  const AlphabetSpec& a = family.front().perm.alphabet();
  for (const auto& g : family) {
    if (!(g.perm.alphabet() == a)) throw DomainError("family members act on different alphabets");
  }
  return a;
}

// For every ray, the generators with a nonzero eventual shift on it.
std::map<std::string, std::vector<std::size_t>> shifters(std::span<const NamedPerm> family,
                                                         const AlphabetSpec& a) {
  std::map<std::string, std::vector<std::size_t>> out;
  for (const auto& r : a.rays()) out[r];
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (const auto& [r, d] : family[k].perm.ray_shift()) out[r].push_back(k);
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Edge indices along the forest path from `from` to `to`.
std::vector<std::size_t> forest_path(const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj,
                                     std::size_t from, std::size_t to) {
  std::vector<std::pair<std::size_t, std::size_t>> prev(adj.size(), {SIZE_MAX, SIZE_MAX});
  std::queue<std::size_t> q;
  q.push(from);
  prev[from] = {from, SIZE_MAX};
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    if (u == to) break;
    for (auto [v, e] : adj[u]) {
      if (prev[v].first == SIZE_MAX) {
        prev[v] = {u, e};
        q.push(v);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = to; v != from; v = prev[v].first) path.push_back(prev[v].second);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<NamedPerm> name_family(std::span<const FDPerm> family) {
  std::vector<NamedPerm> out;
  out.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) out.push_back({"a" + std::to_string(i), family[i]});
  return out;
}

std::string to_string(const CoreVertex& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

std::size_t CoreGraph::index_of(const CoreVertex& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw DomainError("vertex '" + to_string(v) + "' not in core graph");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::int64_t auto_radius(std::span<const NamedPerm> family) {
  std::int64_t m = 0;
  for (const auto& g : family) m = std::max({m, g.perm.window_bound(), patch_extent(g.perm)});
  return m + static_cast<std::int64_t>(family.size()) + 2;
}

std::int64_t auto_radius(std::span<const FDPerm> family) {
  return auto_radius(name_family(family));
}

CoreGraph core_graph(std::span<const NamedPerm> family, std::int64_t radius) {
  const AlphabetSpec& alphabet = shared_alphabet(family);
  if (const std::int64_t need = auto_radius(family); radius < need) {
    throw DomainError("radius " + std::to_string(radius) + " too small; need at least " +
                      std::to_string(need));
  }
  const auto shifted_by = shifters(family, alphabet);
  std::map<std::string, std::int64_t> tail_modulus;
  for (const auto& [r, ks] : shifted_by) {
    if (ks.size() > 1) {
      throw DomainError("generators '" + family[ks[0]].name + "' and '" + family[ks[1]].name +
                        "' both shift ray '" + r + "'");
    }
    if (ks.size() == 1) tail_modulus[r] = std::abs(family[ks[0]].perm.shift(r));
  }

  CoreGraph g;
  g.radius = radius;
  for (const auto& f : family) g.generators.push_back(f.name);
  const std::vector<Letter> letters = window(alphabet, radius);
  std::map<Letter, std::size_t> letter_index;
  for (const auto& x : letters) {
    letter_index.emplace(x, g.vertices.size());
    g.vertices.emplace_back(x);
  }
  std::map<RayTail, std::size_t> tail_index;
  for (const auto& [r, m] : tail_modulus) {
    for (int end : {-1, 1}) {
      for (std::int64_t c = 0; c < m; ++c) tail_index.emplace(RayTail{r, end, c, m}, 0);
    }
  }
  for (auto& [t, idx] : tail_index) {
    idx = g.vertices.size();
    g.vertices.emplace_back(t);
  }
  auto vertex_of = [&](const Letter& y) -> std::size_t {
    if (y.is_fin() || std::abs(y.index()) <= radius) return letter_index.at(y);
    const std::int64_t m = tail_modulus.at(y.id());
    return tail_index.at(RayTail{y.id(), sign(y.index()), floor_mod(y.index(), m), m});
  };

  for (std::size_t k = 0; k < family.size(); ++k) {
    const FDPerm& p = family[k].perm;
    std::set<Letter> cycle_max;
    for (const auto& o : orbits(p).orbits) {
      if (const auto* fin = std::get_if<FiniteOrbit>(&o); fin && fin->letters.size() > 1) {
        cycle_max.insert(*std::max_element(fin->letters.begin(), fin->letters.end()));
      }
    }
    for (const auto& x : letters) {
      const Letter y = p(x);
      if (y == x) continue;
      CoreEdge e{letter_index.at(x), vertex_of(y), k};
      if (cycle_max.contains(x)) {
        g.removed.push_back(e);
      } else {
        g.edges.push_back(e);
      }
    }
    // Edges leaving the incoming tails of shifted rays.
    for (const auto& [r, d] : p.ray_shift()) {
      const std::int64_t m = std::abs(d);
      for (std::int64_t step = 1; step <= m; ++step) {
        const Letter x = Letter::ray(r, -sign(d) * (radius + step));
        g.edges.push_back(CoreEdge{vertex_of(x), vertex_of(p(x)), k});
      }
    }
  }
  return g;
}

CoreGraph core_graph(std::span<const FDPerm> family, std::int64_t radius) {
  return core_graph(name_family(family), radius);
}

std::string_view to_string(DendroidCertificate::Kind k) {
  switch (k) {
    case DendroidCertificate::Kind::Tree: return "tree";
    case DendroidCertificate::Kind::Cycle: return "cycle";
    case DendroidCertificate::Kind::Disconnected: return "disconnected";
    case DendroidCertificate::Kind::SharedTail: return "shared-tail";
    case DendroidCertificate::Kind::FixedRay: return "fixed-ray";
  }
  return "?";
}

DendroidCertificate is_dendroid_family(std::span<const NamedPerm> family, std::int64_t radius) {
  const AlphabetSpec& alphabet = shared_alphabet(family);
  DendroidCertificate cert;
  for (const auto& [r, ks] : shifters(family, alphabet)) {
    if (ks.size() > 1) {
      cert.kind = DendroidCertificate::Kind::SharedTail;
      cert.reason = "generators '" + family[ks[0]].name + "' and '" + family[ks[1]].name +
                    "' both shift ray '" + r + "'; their orbits meet in infinitely many letters";
      return cert;
    }
    if (ks.empty()) {
      const std::int64_t far = radius + 1;
      cert.kind = DendroidCertificate::Kind::FixedRay;
      cert.reason = "no generator shifts ray '" + r + "'; letters such as '" +
                    to_string(Letter::ray(r, far)) + "' are fixed by every generator (isolated)";
      return cert;
    }
  }

  cert.graph = core_graph(family, radius);
  const CoreGraph& g = cert.graph;
  UnionFind uf(g.vertices.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> forest(g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v, k] = g.edges[e];
    if (!uf.unite(u, v)) {
      cert.kind = DendroidCertificate::Kind::Cycle;
      cert.witness = forest_path(forest, u, v);
      cert.witness.push_back(e);
      std::string cyc;
      for (std::size_t w : cert.witness) {
        const auto& ed = g.edges[w];
        if (!cyc.empty()) cyc += ", ";
        cyc += to_string(g.vertices[ed.from]) + " -" + g.generators[ed.generator] + "- " +
               to_string(g.vertices[ed.to]);
      }
      cert.reason = "core graph contains a cycle: " + cyc;
      return cert;
    }
    forest[u].emplace_back(v, e);
    forest[v].emplace_back(u, e);
  }
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (roots.insert(uf.find(v)).second) cert.witness.push_back(v);
  }
  if (roots.size() > 1) {
    cert.kind = DendroidCertificate::Kind::Disconnected;
    cert.reason = "core graph has " + std::to_string(roots.size()) + " components; e.g. '" +
                  to_string(g.vertices[cert.witness[0]]) + "' and '" +
                  to_string(g.vertices[cert.witness[1]]) + "' are not connected";
    return cert;
  }
  cert.witness.resize(g.edges.size());
  std::iota(cert.witness.begin(), cert.witness.end(), 0);
  cert.is_dendroid = true;
  cert.kind = DendroidCertificate::Kind::Tree;
  cert.reason = "core graph is a tree on " + std::to_string(g.vertices.size()) + " vertices";
  return cert;
}

DendroidCertificate is_dendroid_family(std::span<const NamedPerm> family) {
  return is_dendroid_family(family, auto_radius(family));
}

DendroidCertificate is_dendroid_family(std::span<const FDPerm> family) {
  return is_dendroid_family(name_family(family));
}

CycleDiagram cycle_diagram(std::span<const FDPerm> family) {
  if (family.empty()) throw DomainError("empty permutation family");
  const AlphabetSpec& alphabet = family.front().alphabet();
  if (!alphabet.is_finite()) throw DomainError("cycle diagram oracle supports finite alphabets only");
  const std::vector<Letter> letters = window(alphabet, 0);
  const std::size_t n = letters.size();
  std::map<Letter, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(letters[i], i);

  CycleDiagram cd;
  cd.vertices = n;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& p : family) {
    if (!(p.alphabet() == alphabet)) throw DomainError("family members act on different alphabets");
    std::vector<std::size_t> table(n);
    for (std::size_t i = 0; i < n; ++i) table[i] = pos.at(apply(p, letters[i]));
    // One 1-cell per (letter, generator).
    cd.edges += n;
    for (std::size_t i = 0; i < n; ++i) {
      adj[i].push_back(table[i]);
      adj[table[i]].push_back(i);
    }
    // One 2-cell per cycle.
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cd.faces;
      for (std::size_t j = i; !seen[j]; j = table[j]) seen[j] = true;
    }
  }
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (!reached[v]) {
        reached[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  cd.connected = count == n;
  return cd;
}

bool cycle_diagram_oracle(std::span<const FDPerm> family) {
  const CycleDiagram cd = cycle_diagram(family);
  return cd.connected && cd.euler_characteristic() == 1;
}

std::string to_dot(const DendroidCertificate& cert) {
  const CoreGraph& g = cert.graph;
  DotWriter dot("core", false);
  for (const auto& v : g.vertices) {
    dot.add_node(to_string(v), std::holds_alternative<RayTail>(v) ? "shape=box" : "");
  }
  std::set<std::size_t> bold;
  if (cert.kind == DendroidCertificate::Kind::Cycle) bold.insert(cert.witness.begin(), cert.witness.end());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    std::string attrs = "label=" + dot_quote(g.generators[ed.generator]);
    if (bold.contains(e)) {
      attrs += ", color=red, penwidth=3";
    } else {
      attrs += ", color=\"" + std::string(generator_color(ed.generator)) + "\"";
    }
    dot.add_edge(ed.from, ed.to, attrs);
  }
  for (const auto& ed : g.removed) {
    dot.add_edge(ed.from, ed.to,
                 "label=" + dot_quote(g.generators[ed.generator]) + ", style=dashed, color=grey");
  }
  return dot.str();
}

}  // namespace dendroid
