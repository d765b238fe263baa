#pragma once

// Plane rooted trees whose vertices carry polyomino decorations. A vertex
// with d children is decorated by a stack polyomino of rise d or by a
// Durfee-constrained Ferrers diagram of width d, depending on the species
// assigned to its level; the empty decoration marks a leaf.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "theta_root/polyomino.hpp"
#include "theta_root/series.hpp"
#include "theta_root/species.hpp"

namespace theta_root::trees {

struct Empty {
  friend auto operator<=>(const Empty&, const Empty&) = default;
};

using Decoration = std::variant<Empty, polyomino::StackPolyomino, polyomino::FerrersDiagram>;

int decoration_size(const Decoration& d);
int decoration_area(const Decoration& d);

class EnrichedTree {
 public:
  // A single vertex with the empty decoration.
  EnrichedTree() = default;
  // Throws Error if the child count differs from the decoration size or a
  // Ferrers decoration violates the Durfee condition.
  EnrichedTree(Decoration decoration, std::vector<EnrichedTree> children);

  const Decoration& decoration() const { return decoration_; }
  const std::vector<EnrichedTree>& children() const { return children_; }

  int area() const;
  int vertices() const;
  // Root at level 0; a single vertex has height 0.
  int height() const;

  friend bool operator==(const EnrichedTree&, const EnrichedTree&) = default;

 private:
  Decoration decoration_;
  std::vector<EnrichedTree> children_;
};

// True if every non-empty decoration at level i belongs to sigma.at(i).
bool respects_species(const EnrichedTree& tree, const SigmaWord& sigma);

/// (area, vertices) -> number of trees.
using AreaVertexTable = std::map<std::pair<int, int>, Integer>;

// Counts every tree of total area <= max_area (and height <= max_height when
// given) whose level-i decorations come from sigma.at(i).
AreaVertexTable enumerate_trees(const SigmaWord& sigma, int max_area, std::optional<int> max_height = std::nullopt);

/// Area marginal of enumerate_trees.
QSeries count_by_area(const SigmaWord& sigma, int max_area);

/// enumerate_trees as a series in q with t-polynomial coefficients.
TQSeries as_series(const AreaVertexTable& table, int max_area);

// Builds every tree of exactly the given area. Limited to area <= 8.
std::vector<EnrichedTree> materialize_trees(const SigmaWord& sigma, int area,
                                            std::optional<int> max_height = std::nullopt);

// Area-increasing injection on stack-enriched trees: the empty tree goes to
// the single-cell tree, otherwise the root stack gains a cell at the right
// end of its bottom row.
EnrichedTree injection_step(const EnrichedTree& tree);

// Preorder text form: "(" decoration children... ")", with decorations
// written as "" (empty), "s" + column heights, or "f" + row lengths,
// separated by '.', e.g. "(s1.2()())".
std::string canonical_encoding(const EnrichedTree& tree);
EnrichedTree decode_tree(std::string_view text);

// Graphviz digraph with one cluster per tree.
std::string to_dot(const std::vector<EnrichedTree>& trees);

}  // namespace theta_root::trees
