#include "dendroid/dot.hpp"

#include <array>

namespace dendroid {

DotWriter::DotWriter(std::string name, bool directed) : name_(std::move(name)), directed_(directed) {}

std::size_t DotWriter::add_node(std::string_view label, std::string_view attrs) {
  std::string line = "  n" + std::to_string(nodes_.size()) + " [label=" + dot_quote(label);
  if (!attrs.empty()) line += ", " + std::string(attrs);
  line += "];";
  nodes_.push_back(std::move(line));
  return nodes_.size() - 1;
}

void DotWriter::add_edge(std::size_t from, std::size_t to, std::string_view attrs) {
  std::string line = "  n" + std::to_string(from) + (directed_ ? " -> " : " -- ") + "n" +
                     std::to_string(to);
  if (!attrs.empty()) line += " [" + std::string(attrs) + "]";
  line += ";";
  edges_.push_back(std::move(line));
}

void DotWriter::add_graph_attr(std::string_view attr) { graph_attrs_.emplace_back(attr); }

std::string DotWriter::str() const {
  std::string out = (directed_ ? "digraph " : "graph ") + dot_quote(name_) + " {\n";
  for (const auto& a : graph_attrs_) out += "  " + a + ";\n";
  for (const auto& n : nodes_) out += n + "\n";
  for (const auto& e : edges_) out += e + "\n";
  out += "}\n";
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string_view generator_color(std::size_t i) {
  static constexpr std::array<std::string_view, 8> kPalette = {
      "#ff7f00", "#7f00ff", "#1f78b4", "#33a02c", "#e31a1c", "#6a3d9a", "#b15928", "#a6cee3"};
  return kPalette[i % kPalette.size()];
}

}  // namespace dendroid
