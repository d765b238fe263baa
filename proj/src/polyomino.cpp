#include "theta_root/polyomino.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace theta_root::polyomino {

// ---------------------------------------------------------------------------
// Shapes

bool is_unimodal(std::span<const int> heights) {
  std::size_t i = 1;
  while (i < heights.size() && heights[i] >= heights[i - 1]) ++i;
  while (i < heights.size() && heights[i] <= heights[i - 1]) ++i;
  return i >= heights.size();
}

std::vector<int> rise_candidates(std::span<const int> heights) {
  std::vector<int> out;
  const int m = static_cast<int>(heights.size());
  for (int j = 0; j < m; ++j) {
    bool ok = true;
    for (int i = 1; i < j && ok; ++i) ok = heights[i - 1] <= heights[i];
    if (j >= 1) ok = ok && heights[j - 1] < heights[j];
    for (int i = j + 1; i < m && ok; ++i) ok = heights[i - 1] >= heights[i];
    if (ok) out.push_back(j);
  }
  return out;
}

StackPolyomino::StackPolyomino(std::vector<int> heights) : heights_(std::move(heights)) {
  if (heights_.empty()) throw Error("stack polyomino needs at least one column");
  if (std::any_of(heights_.begin(), heights_.end(), [](int h) { return h <= 0; }))
    throw Error("stack polyomino column heights must be positive");
  if (!is_unimodal(heights_)) throw Error("stack polyomino column heights must be unimodal");
}

int StackPolyomino::height() const { return *std::max_element(heights_.begin(), heights_.end()); }

int StackPolyomino::area() const { return std::accumulate(heights_.begin(), heights_.end(), 0); }

int StackPolyomino::rise() const {
  return static_cast<int>(std::max_element(heights_.begin(), heights_.end()) - heights_.begin());
}

StackPolyomino StackPolyomino::widened() const {
  auto h = heights_;
  h.push_back(1);
  return StackPolyomino(std::move(h));
}

FerrersDiagram::FerrersDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error("Ferrers diagram needs at least one row");
  if (rows_.back() <= 0) throw Error("Ferrers diagram rows must be positive");
  if (!std::is_sorted(rows_.begin(), rows_.end(), std::greater<>()))
    throw Error("Ferrers diagram rows must be weakly decreasing");
}

int FerrersDiagram::area() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

int FerrersDiagram::durfee_side() const {
  int n = 0;
  while (n < height() && rows_[n] >= n + 1) ++n;
  return n;
}

bool FerrersDiagram::satisfies_durfee_condition() const {
  const int n = durfee_side();
  return rows_[n - 1] == n;
}

std::ostream& operator<<(std::ostream& os, const StackPolyomino& s) {
  os << "stack(";
  for (std::size_t i = 0; i < s.heights().size(); ++i) os << (i ? "," : "") << s.heights()[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const FerrersDiagram& f) {
  os << "ferrers(";
  for (std::size_t i = 0; i < f.rows().size(); ++i) os << (i ? "," : "") << f.rows()[i];
  return os << ')';
}

// ---------------------------------------------------------------------------
// Exhaustive generation

namespace {

void stack_rec(std::vector<int>& h, int remaining, bool descending,
               const std::function<void(const StackPolyomino&)>& visit) {
  visit(StackPolyomino(h));
  const int last = h.back();
  const int top = descending ? std::min(last, remaining) : remaining;
  for (int next = 1; next <= top; ++next) {
    h.push_back(next);
    stack_rec(h, remaining - next, descending || next < last, visit);
    h.pop_back();
  }
}

void ferrers_rec(std::vector<int>& rows, int remaining, bool durfee_condition,
                 const std::function<void(const FerrersDiagram&)>& visit) {
  FerrersDiagram d(rows);
  if (!durfee_condition || d.satisfies_durfee_condition()) visit(d);
  for (int next = std::min(rows.back(), remaining); next >= 1; --next) {
    rows.push_back(next);
    ferrers_rec(rows, remaining - next, durfee_condition, visit);
    rows.pop_back();
  }
}

}  // namespace

void for_each_stack(int max_area, const std::function<void(const StackPolyomino&)>& visit) {
  std::vector<int> h;
  for (int first = 1; first <= max_area; ++first) {
    h.assign(1, first);
    stack_rec(h, max_area - first, false, visit);
  }
}

void for_each_ferrers(int max_area, bool durfee_condition, const std::function<void(const FerrersDiagram&)>& visit) {
  std::vector<int> rows;
  for (int first = 1; first <= max_area; ++first) {
    rows.assign(1, first);
    ferrers_rec(rows, max_area - first, durfee_condition, visit);
  }
}

CountTable enumerate_stacks(int max_area) {
  CountTable table;
  for_each_stack(max_area, [&](const StackPolyomino& s) {
    table[ShapeKey{s.area(), s.width(), s.height(), s.rise()}] += 1;
  });
  return table;
}

CountTable enumerate_ferrers(int max_area, bool durfee_condition) {
  CountTable table;
  for_each_ferrers(max_area, durfee_condition, [&](const FerrersDiagram& f) {
    table[ShapeKey{f.area(), f.width(), f.height(), 0}] += 1;
  });
  return table;
}

// ---------------------------------------------------------------------------
// Generating functions

namespace {

// Sparse integer polynomial in (x, y, a, q), truncated per variable.
class Poly4 {
 public:
  using Exps = std::array<int, 4>;
  enum Var { X = 0, Y = 1, A = 2, Q = 3 };

  explicit Poly4(Exps limits) : limits_(limits) {}

  static Poly4 monomial(Exps limits, Exps e, const Integer& c = 1) {
    Poly4 p(limits);
    p.add(e, c);
    return p;
  }

  void add(const Exps& e, const Integer& c) {
    for (int v = 0; v < 4; ++v)
      if (e[v] > limits_[v]) return;
    auto& slot = terms_[e];
    slot += c;
    if (sgn(slot) == 0) terms_.erase(e);
  }

  Poly4& operator+=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }

  friend Poly4 operator*(const Poly4& a, const Poly4& b) {
    Poly4 r(a.limits_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e{};
        for (int v = 0; v < 4; ++v) e[v] = ea[v] + eb[v];
        r.add(e, ca * cb);
      }
    return r;
  }

  // 1 / (1 - m) for a monomial m of positive q-degree.
  static Poly4 geometric(Exps limits, Exps m) {
    Poly4 r(limits);
    Exps e{};
    while (true) {
      bool inside = true;
      for (int v = 0; v < 4; ++v) inside = inside && e[v] <= limits[v];
      if (!inside) break;
      r.add(e, 1);
      for (int v = 0; v < 4; ++v) e[v] += m[v];
    }
    return r;
  }

  // x -> x q
  Poly4 substitute_xq() const {
    Poly4 r(limits_);
    for (const auto& [e, c] : terms_) r.add({e[X], e[Y], e[A], e[Q] + e[X]}, c);
    return r;
  }

  CountTable table() const {
    CountTable t;
    for (const auto& [e, c] : terms_) t[ShapeKey{e[Q], e[X], e[Y], e[A]}] = c;
    return t;
  }

  friend bool operator==(const Poly4& a, const Poly4& b) { return a.terms_ == b.terms_; }

 private:
  Exps limits_;
  std::map<Exps, Integer> terms_;
};

Poly4::Exps clamp_limits(int x_order, int y_order, int a_order, int q_order) {
  if (x_order < 0 || y_order < 0 || a_order < 0 || q_order < 0) throw Error("orders must be non-negative");
  // Width, height and rise never exceed the area.
  return {std::min(x_order, q_order), std::min(y_order, q_order), std::min(a_order, q_order), q_order};
}

}  // namespace

CountTable stack_gf_closed(int x_order, int y_order, int a_order, int q_order) {
  const auto lim = clamp_limits(x_order, y_order, a_order, q_order);
  Poly4 sum(lim);
  Poly4 denominators = Poly4::monomial(lim, {0, 0, 0, 0});
  for (int n = 1; n <= lim[Poly4::Y] && n <= q_order; ++n) {
    denominators = denominators * Poly4::geometric(lim, {1, 0, 0, n});
    if (n >= 2) denominators = denominators * Poly4::geometric(lim, {1, 0, 1, n - 1});
    sum += Poly4::monomial(lim, {1, n, 0, n}) * denominators;
  }
  return sum.table();
}

namespace {

// One application of G(x) -> xyq/(1-xq) + y/((1-xq)(1-axq)) G(xq).
class StackRowBuilder {
 public:
  explicit StackRowBuilder(Poly4::Exps lim)
      : height_one_(Poly4::monomial(lim, {1, 1, 0, 1}) * Poly4::geometric(lim, {1, 0, 0, 1})),
        new_row_(Poly4::monomial(lim, {0, 1, 0, 0}) * Poly4::geometric(lim, {1, 0, 0, 1}) *
                 Poly4::geometric(lim, {1, 0, 1, 1})) {}

  Poly4 operator()(const Poly4& g) const {
    Poly4 next = height_one_;
    next += new_row_ * g.substitute_xq();
    return next;
  }

 private:
  Poly4 height_one_;
  Poly4 new_row_;
};

}  // namespace

CountTable stack_gf_functional_steps(int x_order, int y_order, int a_order, int q_order, int iterations) {
  const auto lim = clamp_limits(x_order, y_order, a_order, q_order);
  const StackRowBuilder step(lim);
  Poly4 g(lim);
  for (int i = 0; i < iterations; ++i) g = step(g);
  return g.table();
}

CountTable stack_gf_functional(int x_order, int y_order, int a_order, int q_order) {
  const auto lim = clamp_limits(x_order, y_order, a_order, q_order);
  const StackRowBuilder step(lim);
  // Iteration k is exact for heights <= k.
  Poly4 g(lim);
  for (int i = 0; i <= q_order + 1; ++i) {
    Poly4 next = step(g);
    if (next == g) return g.table();
    g = std::move(next);
  }
  throw Error("functional equation iteration did not stabilize");
}

FerrersForms ferrers_gf_two_forms(int x_order, int y_order, int q_order) {
  const auto lim = clamp_limits(x_order, y_order, 0, q_order);
  FerrersForms out;

  // A first row of length n, then any rows of length <= n above it.
  Poly4 by_width(lim);
  Poly4 rows = Poly4::monomial(lim, {0, 0, 0, 0});
  for (int n = 1; n <= lim[Poly4::X]; ++n) {
    rows = rows * Poly4::geometric(lim, {0, 1, 0, n});
    by_width += Poly4::monomial(lim, {n, 1, 0, n}) * rows;
  }
  out.by_width = by_width.table();

  Poly4 by_durfee(lim);
  Poly4 both = Poly4::monomial(lim, {0, 0, 0, 0});
  for (int n = 1; n * n <= q_order; ++n) {
    both = both * Poly4::geometric(lim, {1, 0, 0, n}) * Poly4::geometric(lim, {0, 1, 0, n});
    by_durfee += Poly4::monomial(lim, {n, n, 0, n * n}) * both;
  }
  out.by_durfee = by_durfee.table();
  return out;
}

CountTable ferrers_gf_constrained(int x_order, int y_order, int q_order) {
  const auto lim = clamp_limits(x_order, y_order, 0, q_order);
  Poly4 sum(lim);
  Poly4 denominators = Poly4::monomial(lim, {0, 0, 0, 0});
  for (int n = 1; n * n <= q_order; ++n) {
    denominators = denominators * Poly4::geometric(lim, {0, 1, 0, n});
    if (n >= 2) denominators = denominators * Poly4::geometric(lim, {1, 0, 0, n - 1});
    sum += Poly4::monomial(lim, {n, n, 0, n * n}) * denominators;
  }
  return sum.table();
}

Integer area_total(const CountTable& table, int area) {
  Integer total = 0;
  for (const auto& [key, count] : table)
    if (key.area == area) total += count;
  return total;
}

CountTable restricted(const CountTable& table, int max_area) {
  CountTable out;
  for (const auto& [key, count] : table)
    if (key.area <= max_area && sgn(count) != 0) out.emplace(key, count);
  return out;
}

}  // namespace theta_root::polyomino
