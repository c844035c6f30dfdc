#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dendroid/permutation.hpp"

namespace dendroid {

/// A permutation together with the name used for its edges.
struct NamedPerm {
  std::string name;
  FDPerm perm;
};

/// Names generators `a0, a1, ...` in list order.
std::vector<NamedPerm> name_family(std::span<const FDPerm> family);

/// A vertex of the condensed core graph: a letter inside the radius, or a
/// whole ray tail beyond it collapsed to one point.
using CoreVertex = std::variant<Letter, RayTail>;

std::string to_string(const CoreVertex& v);

struct CoreEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t generator = 0;
};

/// Schreier graph of the family with one edge removed per finite orbit per
/// generator, restricted to letters with `|index| <= radius` and with every
/// shifted ray tail beyond the radius condensed to a single vertex.
///
/// Vertices are in canonical order (letters first, then tails). The edge
/// removed from each finite cycle is the one leaving its largest letter;
/// fixed points lose their loop.
struct CoreGraph {
  std::int64_t radius = 0;
  std::vector<std::string> generators;
  std::vector<CoreVertex> vertices;
  std::vector<CoreEdge> edges;
  std::vector<CoreEdge> removed;  // one per nontrivial finite cycle inside the radius

  std::size_t index_of(const CoreVertex& v) const;  // throws DomainError if absent
};

/// Smallest radius accepted by `core_graph`: the largest ray index touched by
/// any patch or window bound, plus the family size, plus 2.
std::int64_t auto_radius(std::span<const NamedPerm> family);
std::int64_t auto_radius(std::span<const FDPerm> family);

/// Throws DomainError if the family mixes alphabets, if `radius` is below
/// `auto_radius` (the message names the required radius), or if two
/// generators shift the same ray (tails cannot be condensed then).
/// Rays shifted by no generator contribute only their in-radius letters.
CoreGraph core_graph(std::span<const NamedPerm> family, std::int64_t radius);
CoreGraph core_graph(std::span<const FDPerm> family, std::int64_t radius);

struct DendroidCertificate {
  enum class Kind { Tree, Cycle, Disconnected, SharedTail, FixedRay };

  bool is_dendroid = false;
  Kind kind = Kind::Tree;
  std::string reason;
  CoreGraph graph;                     // empty when rejected before condensation
  std::vector<std::size_t> witness;    // edge indices (Cycle) or vertex indices (Disconnected)
};

std::string_view to_string(DendroidCertificate::Kind k);

/// Decides whether the family is dendroid via the core-graph tree test at
/// `auto_radius`. Families where two generators shift one ray, or where some
/// ray is shifted by no generator, are rejected up front.
DendroidCertificate is_dendroid_family(std::span<const NamedPerm> family);
DendroidCertificate is_dendroid_family(std::span<const NamedPerm> family, std::int64_t radius);
DendroidCertificate is_dendroid_family(std::span<const FDPerm> family);

/// Cell counts of the cycle diagram of a family on a finite alphabet.
struct CycleDiagram {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  bool connected = false;

  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(vertices) - static_cast<std::int64_t>(edges) +
           static_cast<std::int64_t>(faces);
  }
};

/// Builds the cycle diagram cell by cell from explicit permutation tables.
/// Throws DomainError if the alphabet has rays.
CycleDiagram cycle_diagram(std::span<const FDPerm> family);

/// Contractibility of the cycle diagram: every face is glued along a cycle of
/// private edges, so the complex is contractible iff it is connected with
/// Euler characteristic 1.
bool cycle_diagram_oracle(std::span<const FDPerm> family);

/// Tree edges solid, witness cycle edges bold red, removed edges dashed grey.
std::string to_dot(const DendroidCertificate& cert);

}  // namespace dendroid
