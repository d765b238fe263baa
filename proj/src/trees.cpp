#include "theta_root/trees.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace theta_root::trees {

using polyomino::FerrersDiagram;
using polyomino::StackPolyomino;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr int kMaxMaterializedArea = 8;

}  // namespace

int decoration_size(const Decoration& d) {
  return std::visit(overloaded{[](const Empty&) { return 0; },
                               [](const StackPolyomino& s) { return s.rise(); },
                               [](const FerrersDiagram& f) { return f.width(); }},
                    d);
}

int decoration_area(const Decoration& d) {
  return std::visit(overloaded{[](const Empty&) { return 0; }, [](const auto& shape) { return shape.area(); }}, d);
}

EnrichedTree::EnrichedTree(Decoration decoration, std::vector<EnrichedTree> children)
    : decoration_(std::move(decoration)), children_(std::move(children)) {
  if (const auto* f = std::get_if<FerrersDiagram>(&decoration_); f && !f->satisfies_durfee_condition())
    throw Error("Ferrers decoration must have m_n = n for some n");
  if (static_cast<int>(children_.size()) != decoration_size(decoration_))
    throw Error("vertex out-degree must equal the decoration size");
}

int EnrichedTree::area() const {
  int a = decoration_area(decoration_);
  for (const auto& c : children_) a += c.area();
  return a;
}

int EnrichedTree::vertices() const {
  int v = 1;
  for (const auto& c : children_) v += c.vertices();
  return v;
}

int EnrichedTree::height() const {
  int h = 0;
  for (const auto& c : children_) h = std::max(h, c.height() + 1);
  return h;
}

namespace {

bool respects_species_at(const EnrichedTree& tree, const SigmaWord& sigma, int level) {
  const auto& d = tree.decoration();
  if (std::holds_alternative<StackPolyomino>(d) && sigma.at(level) != Species::stack) return false;
  if (std::holds_alternative<FerrersDiagram>(d) && sigma.at(level) != Species::ferrers) return false;
  return std::all_of(tree.children().begin(), tree.children().end(),
                     [&](const EnrichedTree& c) { return respects_species_at(c, sigma, level + 1); });
}

// counts[area][size] of the non-empty decorations of one species.
using DecorationCounts = std::vector<std::vector<Integer>>;

DecorationCounts decoration_counts(Species species, int max_area) {
  DecorationCounts counts(max_area + 1, std::vector<Integer>(max_area + 1));
  if (species == Species::stack) {
    polyomino::for_each_stack(max_area, [&](const StackPolyomino& s) { counts[s.area()][s.rise()] += 1; });
  } else {
    polyomino::for_each_ferrers(max_area, true, [&](const FerrersDiagram& f) { counts[f.area()][f.width()] += 1; });
  }
  return counts;
}

std::vector<Decoration> decorations(Species species, int max_area) {
  std::vector<Decoration> out;
  if (species == Species::stack) {
    polyomino::for_each_stack(max_area, [&](const StackPolyomino& s) { out.emplace_back(s); });
  } else {
    polyomino::for_each_ferrers(max_area, true, [&](const FerrersDiagram& f) { out.emplace_back(f); });
  }
  return out;
}

// Deepest level that can hold a vertex. A vertex at level L needs L ancestors
// of positive size, each of area >= 1, so L <= max_area.
int top_level(int max_area, std::optional<int> max_height) {
  if (max_height && *max_height < 0) throw Error("max_height must be non-negative");
  return max_height ? std::min(*max_height, max_area) : max_area;
}

}  // namespace

bool respects_species(const EnrichedTree& tree, const SigmaWord& sigma) {
  return respects_species_at(tree, sigma, 0);
}

AreaVertexTable enumerate_trees(const SigmaWord& sigma, int max_area, std::optional<int> max_height) {
  if (max_area < 0) throw Error("max_area must be non-negative");
  if (sigma.empty()) throw Error("empty sigma word");
  const int top = top_level(max_area, max_height);
  const DecorationCounts counts[2] = {decoration_counts(Species::stack, max_area),
                                      decoration_counts(Species::ferrers, max_area)};
  const auto t = TPoly::t();

  // below = generating function of subtrees rooted one level further down.
  TQSeries below(max_area);
  for (int level = top; level >= 0; --level) {
    const auto& c = counts[static_cast<int>(sigma.at(level))];
    auto inner = TQSeries::one(max_area);
    std::vector<TQSeries> powers{TQSeries::one(max_area)};
    for (int size = 0; size <= max_area; ++size) {
      if (size >= 1) powers.push_back(powers.back() * below);
      for (int area = 1; area <= max_area; ++area) {
        if (sgn(c[area][size]) == 0) continue;
        inner.add_shifted(TPoly(c[area][size]) * powers[size], area);
      }
    }
    below = t * inner;
  }

  AreaVertexTable table;
  for (int area = 0; area <= max_area; ++area) {
    const auto& p = below[area];
    for (int v = 0; v <= p.degree(); ++v)
      if (sgn(p[v]) != 0) table[{area, v}] = p[v];
  }
  return table;
}

QSeries count_by_area(const SigmaWord& sigma, int max_area) {
  std::vector<Integer> coeffs(max_area + 1);
  for (const auto& [key, count] : enumerate_trees(sigma, max_area)) coeffs[key.first] += count;
  return QSeries(max_area, std::move(coeffs));
}

TQSeries as_series(const AreaVertexTable& table, int max_area) {
  std::vector<TPoly> coeffs(max_area + 1);
  for (const auto& [key, count] : table) {
    if (key.first <= max_area) coeffs[key.first] += TPoly::monomial(count, key.second);
  }
  return TQSeries(max_area, std::move(coeffs));
}

std::vector<EnrichedTree> materialize_trees(const SigmaWord& sigma, int area, std::optional<int> max_height) {
  if (area < 0) throw Error("area must be non-negative");
  if (area > kMaxMaterializedArea) throw Error("tree materialization is limited to area <= 8");
  if (sigma.empty()) throw Error("empty sigma word");
  const int top = top_level(area, max_height);
  const std::vector<Decoration> pools[2] = {decorations(Species::stack, area),
                                            decorations(Species::ferrers, area)};

  std::map<std::pair<int, int>, std::vector<EnrichedTree>> memo;
  std::function<const std::vector<EnrichedTree>&(int, int)> build = [&](int level, int budget)
      -> const std::vector<EnrichedTree>& {
    const auto key = std::make_pair(level, budget);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<EnrichedTree> out;
    if (budget == 0) out.emplace_back();
    for (const auto& deco : pools[static_cast<int>(sigma.at(level))]) {
      const int a = decoration_area(deco);
      const int size = decoration_size(deco);
      if (a > budget || (size > 0 && level >= top)) continue;
      // Split the remaining area over the ordered children, then take the
      // product of their tree lists.
      std::vector<int> split(size, 0);
      std::vector<EnrichedTree> partial;
      std::function<void(int)> product = [&](int i) {
        if (i == size) {
          out.emplace_back(deco, partial);
          return;
        }
        for (const auto& sub : build(level + 1, split[i])) {
          partial.push_back(sub);
          product(i + 1);
          partial.pop_back();
        }
      };
      std::function<void(int, int)> distribute = [&](int child, int rest) {
        if (child == size) {
          if (rest == 0) product(0);
          return;
        }
        for (int r = 0; r <= rest; ++r) {
          split[child] = r;
          distribute(child + 1, rest - r);
        }
      };
      distribute(0, budget - a);
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return build(0, area);
}

EnrichedTree injection_step(const EnrichedTree& tree) {
  std::function<void(const EnrichedTree&)> check = [&](const EnrichedTree& node) {
    if (std::holds_alternative<FerrersDiagram>(node.decoration())) throw Error("injection defined on S_q trees");
    for (const auto& c : node.children()) check(c);
  };
  check(tree);
  if (tree.area() == 0) return EnrichedTree(StackPolyomino({1}), {});
  const auto& root = std::get<StackPolyomino>(tree.decoration());
  return EnrichedTree(root.widened(), tree.children());
}

std::string canonical_encoding(const EnrichedTree& tree) {
  std::string out = "(";
  std::visit(overloaded{[](const Empty&) {},
                        [&](const StackPolyomino& s) {
                          out += 's';
                          for (std::size_t i = 0; i < s.heights().size(); ++i)
                            out += (i ? "." : "") + std::to_string(s.heights()[i]);
                        },
                        [&](const FerrersDiagram& f) {
                          out += 'f';
                          for (std::size_t i = 0; i < f.rows().size(); ++i)
                            out += (i ? "." : "") + std::to_string(f.rows()[i]);
                        }},
             tree.decoration());
  for (const auto& c : tree.children()) out += canonical_encoding(c);
  return out + ")";
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  EnrichedTree parse() {
    auto tree = node();
    if (pos_ != text_.size()) fail("trailing characters");
    return tree;
  }

 private:
  EnrichedTree node() {
    expect('(');
    Decoration deco = Empty{};
    if (peek() == 's') {
      ++pos_;
      deco = StackPolyomino(numbers());
    } else if (peek() == 'f') {
      ++pos_;
      deco = FerrersDiagram(numbers());
    }
    std::vector<EnrichedTree> children;
    while (peek() == '(') children.push_back(node());
    expect(')');
    return EnrichedTree(std::move(deco), std::move(children));
  }

  std::vector<int> numbers() {
    std::vector<int> out;
    do {
      if (!out.empty()) ++pos_;
      int v = 0;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') v = v * 10 + (text_[pos_++] - '0');
      if (pos_ == start) fail("expected a number");
      out.push_back(v);
    } while (peek() == '.');
    return out;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("bad tree encoding at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string label(const Decoration& d) {
  return std::visit(overloaded{[](const Empty&) { return std::string("empty"); },
                               [](const auto& shape) {
                                 std::ostringstream os;
                                 os << shape;
                                 return os.str();
                               }},
                    d);
}

}  // namespace

EnrichedTree decode_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string to_dot(const std::vector<EnrichedTree>& trees) {
  std::ostringstream os;
  os << "digraph trees {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < trees.size(); ++i) {
    os << "  subgraph cluster_" << i << " {\n    label=\"area " << trees[i].area() << ", " << trees[i].vertices()
       << " vertices\";\n";
    int next_id = 0;
    std::function<int(const EnrichedTree&)> emit = [&](const EnrichedTree& node) {
      const int id = next_id++;
      os << "    t" << i << "_" << id << " [label=\"" << label(node.decoration()) << "\"];\n";
      for (const auto& c : node.children()) {
        const int child = emit(c);
        os << "    t" << i << "_" << id << " -> t" << i << "_" << child << ";\n";
      }
      return id;
    };
    emit(trees[i]);
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace theta_root::trees
