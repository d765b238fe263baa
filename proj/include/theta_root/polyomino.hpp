#pragma once

// Stack polyominoes and Ferrers diagrams: exhaustive enumeration and the
// closed-form generating functions they are checked against.

#include <compare>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "theta_root/series.hpp"

namespace theta_root::polyomino {

// Unimodal column heights h_1 <= ... <= h_j < h_{j+1} >= ... >= h_m.
class StackPolyomino {
 public:
  // Throws Error unless heights are non-empty, positive and unimodal.
  explicit StackPolyomino(std::vector<int> heights);

  const std::vector<int>& heights() const { return heights_; }
  int width() const { return static_cast<int>(heights_.size()); }
  int height() const;
  int area() const;
  // Columns strictly before the first maximal column.
  int rise() const;

  // The stack with one more cell appended to the right of its bottom row.
  StackPolyomino widened() const;

  friend auto operator<=>(const StackPolyomino&, const StackPolyomino&) = default;

 private:
  std::vector<int> heights_;
};

// Every j for which h_1 <= ... <= h_j < h_{j+1} >= ... >= h_m holds, found by
// testing each split point directly.
std::vector<int> rise_candidates(std::span<const int> heights);
bool is_unimodal(std::span<const int> heights);

// Weakly decreasing row lengths m_1 >= m_2 >= ... >= m_h >= 1.
class FerrersDiagram {
 public:
  explicit FerrersDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int width() const { return rows_.front(); }
  int height() const { return static_cast<int>(rows_.size()); }
  int area() const;
  // max{i : m_i >= i}
  int durfee_side() const;
  // m_n = n for some n, i.e. the Durfee square has no cell to its right in
  // its top row.
  bool satisfies_durfee_condition() const;

  friend auto operator<=>(const FerrersDiagram&, const FerrersDiagram&) = default;

 private:
  std::vector<int> rows_;
};

std::ostream& operator<<(std::ostream& os, const StackPolyomino& s);
std::ostream& operator<<(std::ostream& os, const FerrersDiagram& f);

// Count-table key. Ferrers tables leave rise at 0.
struct ShapeKey {
  int area = 0;
  int width = 0;
  int height = 0;
  int rise = 0;
  friend auto operator<=>(const ShapeKey&, const ShapeKey&) = default;
};

using CountTable = std::map<ShapeKey, Integer>;

// Generators visit every shape with 1 <= area <= max_area exactly once.
void for_each_stack(int max_area, const std::function<void(const StackPolyomino&)>& visit);
void for_each_ferrers(int max_area, bool durfee_condition, const std::function<void(const FerrersDiagram&)>& visit);

CountTable enumerate_stacks(int max_area);
CountTable enumerate_ferrers(int max_area, bool durfee_condition);

// Expansion of G(x,y,a,q) = sum_{n>=1} x (yq)^n / ((xq;q)_n (axq;q)_{n-1}),
// x = width, y = height, a = rise, q = area.
CountTable stack_gf_closed(int x_order, int y_order, int a_order, int q_order);
// Same table from iterating G(x) = xyq/(1-xq) + y/((1-xq)(1-axq)) G(xq) from 0.
CountTable stack_gf_functional(int x_order, int y_order, int a_order, int q_order);
// Single iteration count variant; zero iterations give the empty table.
CountTable stack_gf_functional_steps(int x_order, int y_order, int a_order, int q_order, int iterations);

// H(x,y,q) summed over the width (column form) and over the Durfee square.
struct FerrersForms {
  CountTable by_width;
  CountTable by_durfee;
};
FerrersForms ferrers_gf_two_forms(int x_order, int y_order, int q_order);

// sum_{n>=1} (xy)^n q^(n^2) / ((yq;q)_n (xq;q)_{n-1})
CountTable ferrers_gf_constrained(int x_order, int y_order, int q_order);

/// Sums counts over all keys with the given area.
Integer area_total(const CountTable& table, int area);
/// Drops zero entries and keys whose area exceeds max_area.
CountTable restricted(const CountTable& table, int max_area);

}  // namespace theta_root::polyomino
