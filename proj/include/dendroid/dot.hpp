#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dendroid {

// Minimal Graphviz writer. Node ids are emitted as n0, n1, ... in insertion
// order so output is byte-stable.
class DotWriter {
 public:
  DotWriter(std::string name, bool directed);

  std::size_t add_node(std::string_view label, std::string_view attrs = {});
  void add_edge(std::size_t from, std::size_t to, std::string_view attrs = {});
  void add_graph_attr(std::string_view attr);

  std::string str() const;

 private:
  std::string name_;
  bool directed_;
  std::vector<std::string> graph_attrs_;
  std::vector<std::string> nodes_;
  std::vector<std::string> edges_;
};

std::string dot_quote(std::string_view s);

// Fixed palette, indexed by generator position.
std::string_view generator_color(std::size_t i);

}  // namespace dendroid
