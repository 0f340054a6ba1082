#pragma once

#include <string>

#include "rgood/hypergraph.hpp"

namespace rgood {

// A target substructure. Paths and cycles keep their parameters so the
// specialised searchers can be used; any other target is a plain hypergraph.
class Pattern {
 public:
  enum class Kind { kPath, kCycle, kGraph };

  static Pattern path(int k, int ell, int n);
  static Pattern cycle(int k, int ell, int n);
  static Pattern graph(Hypergraph h, std::string label = "");

  Kind kind() const { return kind_; }
  int uniformity() const { return graph_.uniformity(); }
  int ell() const { return ell_; }
  // Number of vertices of the target.
  int order() const { return graph_.order(); }
  const Hypergraph& hypergraph() const { return graph_; }
  // Mini-language form when one exists, otherwise a free-form label.
  const std::string& label() const { return label_; }

 private:
  Kind kind_ = Kind::kGraph;
  int ell_ = 0;
  Hypergraph graph_;
  std::string label_;
};

// Parses the mini-language: path:k:ell:n, cycle:k:ell:n, clique:k:n, fano,
// tth:chi:m, c3h:m, edge:k. Throws InvalidInput otherwise.
Pattern parse_pattern(const std::string& spec);
bool is_pattern_spec(const std::string& spec);

}  // namespace rgood
