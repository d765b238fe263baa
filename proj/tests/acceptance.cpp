// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "theta_root/asymptotics.hpp"
#include "theta_root/polyomino.hpp"
#include "theta_root/theta.hpp"
#include "theta_root/trees.hpp"

using namespace theta_root;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0 = untimed
  std::function<void(Outcome&)> body;
};

QSeries series_of(std::initializer_list<long> v) {
  const int order = static_cast<int>(v.size()) - 1;
  return QSeries(order, std::vector<Integer>(v.begin(), v.end()));
}

TQSeries tq_of(std::initializer_list<std::initializer_list<long>> rows) {
  const int order = static_cast<int>(rows.size()) - 1;
  std::vector<TPoly> c;
  for (const auto& r : rows) c.emplace_back(std::vector<Integer>(r.begin(), r.end()));
  return TQSeries(order, std::move(c));
}

const QSeries kXi = series_of({1, 1, 2, 4, 9, 21, 52, 133, 351, 948});

const TQSeries kA = tq_of({{0, 1},
                           {0, 1},
                           {0, 2},
                           {0, 3, 1},
                           {0, 5, 3, 1},
                           {0, 7, 9, 4, 1},
                           {0, 11, 20, 15, 5, 1},
                           {0, 15, 44, 44, 23, 6, 1}});

const TQSeries kAtilde = tq_of({{0, 1},
                                {0, 0, 1},
                                {0, 0, 1, 1},
                                {0, 0, 1, 2, 1},
                                {0, 0, 1, 4, 3, 1},
                                {0, 0, 1, 5, 10, 4, 1},
                                {0, 0, 1, 7, 17, 21, 5, 1},
                                {0, 0, 1, 8, 29, 47, 41, 6, 1}});

trees::AreaVertexTable tabulate(const SigmaWord& sigma, int max_area) {
  trees::AreaVertexTable t;
  for (int a = 0; a <= max_area; ++a)
    for (const auto& tree : trees::materialize_trees(sigma, a)) t[{tree.area(), tree.vertices()}] += 1;
  return t;
}

void ac1(Outcome& o) {
  for (auto m : {XiMethod::theta, XiMethod::fix1, XiMethod::fix2})
    o.require(xi(9, m) == kXi, "method " + std::to_string(static_cast<int>(m)) + " differs from 1,1,2,4,9,...");
}

void ac2(Outcome& o) {
  const auto a = xi_via_theta(200);
  o.require(xi_fix1(200) == a, "fix1 differs at order 200");
  o.require(xi_fix2(200) == a, "fix2 differs at order 200");
}

void ac3(Outcome& o) {
  const auto a = stack_tree_gf(7);
  const auto at = ferrers_tree_gf(7);
  o.require(a == kA, "A(t,q) differs through q^7");
  o.require(at == kAtilde, "A~(t,q) differs through q^7");
  o.require(a[7][5] == 6, "[t^5 q^7] A != 6");
  o.require(at[7][3] == 8, "[t^3 q^7] A~ != 8");
}

void ac4(Outcome& o) {
  const auto stacks = tabulate(SigmaWord::parse("0"), 7);
  const auto ferrers = tabulate(SigmaWord::parse("1"), 7);
  o.require(stacks.at({7, 5}) == 6, "all-stack (area 7, 5 vertices) != 6");
  o.require(ferrers.at({7, 3}) == 8, "all-ferrers (area 7, 3 vertices) != 8");
  o.require(trees::as_series(stacks, 7) == stack_tree_gf(7), "stack tree table != A(t,q)");
  o.require(trees::as_series(ferrers, 7) == ferrers_tree_gf(7), "Ferrers tree table != A~(t,q)");
  o.require(trees::enumerate_trees(SigmaWord::parse("0"), 7) == stacks, "level count != exhaustive stack table");
  o.require(trees::enumerate_trees(SigmaWord::parse("1"), 7) == ferrers, "level count != exhaustive Ferrers table");
}

void ac5(Outcome& o) {
  const std::pair<const char*, TQSeries> displayed[] = {
      {"0", tq_of({{0, 1}, {0, 1}, {0, 2}, {0, 3, 1}})},
      {"10", tq_of({{0, 1}, {0, 0, 1}, {0, 0, 2}, {0, 0, 4}})},
      {"110", tq_of({{0, 1}, {0, 0, 1}, {0, 0, 1, 1}, {0, 0, 1, 3}})},
      {"111", tq_of({{0, 1}, {0, 0, 1}, {0, 0, 1, 1}, {0, 0, 1, 2, 1}})},
  };
  for (const auto& [w, expected] : displayed) {
    const auto word = SigmaWord::parse(w).extended(4);
    o.require(mixed_tree_gf(word, 3) == expected, std::string("sigma ") + w + " differs through q^3");
    o.require(trees::as_series(trees::enumerate_trees(word, 3), 3) == expected,
              std::string("sigma ") + w + " tree count differs");
  }
  const auto xi7 = xi_via_theta(7);
  for (int bits = 0; bits < 8; ++bits) {
    std::string w;
    for (int i = 2; i >= 0; --i) w += static_cast<char>('0' + (bits >> i & 1));
    const auto word = SigmaWord::parse(w);
    o.require(evaluate_t(mixed_tree_gf(word.extended(4), 3)) == series_of({1, 1, 2, 4}),
              "sigma " + w + " marginal != 1,1,2,4");
    o.require(evaluate_t(mixed_tree_gf(word.extended(8), 7)) == xi7, "sigma " + w + " marginal != xi through q^7");
  }
}

void ac6(Outcome& o) {
  for (auto [xo, qo] : {std::pair{8, 16}, {10, 24}}) {
    const auto tag = "(" + std::to_string(xo) + "," + std::to_string(qo) + ")";
    o.require(verify_identity_first(xo, qo), "first identity fails at " + tag);
    o.require(verify_identity_second(xo, qo), "second identity fails at " + tag);
  }
  const auto forms = polyomino::ferrers_gf_two_forms(6, 6, 12);
  o.require(forms.by_width == forms.by_durfee, "Ferrers width/Durfee forms differ at (6,6,12)");
  o.require(polyomino::stack_gf_closed(10, 10, 10, 10) == polyomino::stack_gf_functional(10, 10, 10, 10),
            "stack closed sum != functional iteration at q <= 10");
}

void ac7(Outcome& o) {
  using polyomino::restricted;
  const int n = 10;
  o.require(restricted(polyomino::stack_gf_closed(n, n, n, n), n) == polyomino::enumerate_stacks(n),
            "stack closed form != enumeration");
  const auto forms = polyomino::ferrers_gf_two_forms(n, n, n);
  const auto free = polyomino::enumerate_ferrers(n, false);
  o.require(restricted(forms.by_width, n) == free, "unconstrained Ferrers (width form) != enumeration");
  o.require(restricted(forms.by_durfee, n) == free, "unconstrained Ferrers (Durfee form) != enumeration");
  o.require(restricted(polyomino::ferrers_gf_constrained(n, n, n), n) == polyomino::enumerate_ferrers(n, true),
            "constrained Ferrers != enumeration");
  const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  const auto euler = reciprocal(pochhammer_infinite(QSeries::monomial(1, 1, n), n));
  for (int a = 0; a <= n; ++a) {
    const Integer counted = a == 0 ? Integer(1) : polyomino::area_total(free, a);
    o.require(counted == p[a], "p(" + std::to_string(a) + ") mismatch in enumeration");
    o.require(euler[a] == p[a], "p(" + std::to_string(a) + ") mismatch in 1/(q;q)_inf");
  }
}

void ac8(Outcome& o) {
  const auto x = xi_via_theta(200);
  for (int k = 0; k < 200; ++k)
    o.require(x[k + 1] >= x[k], "coefficients decrease at n = " + std::to_string(k));
  const auto sigma = SigmaWord::parse("0");
  for (int a = 0; a <= 6; ++a) {
    const auto all = trees::materialize_trees(sigma, a);
    std::set<std::string> images;
    for (const auto& t : all) {
      const auto img = trees::injection_step(t);
      o.require(img.area() == a + 1, "injection does not add one cell at area " + std::to_string(a));
      images.insert(trees::canonical_encoding(img));
    }
    o.require(images.size() == all.size(), "injection not injective at area " + std::to_string(a));
  }
}

void ac9(Outcome& o) {
  const auto x = xi_via_theta(300);
  const auto est = asymptotics::estimate_mu(x, {100, 300});
  const asymptotics::Real reference(std::string(asymptotics::kReferenceMu));
  const asymptotics::Real diff = abs(est.mu - reference);
  o.detail = "mu = " + asymptotics::to_string(est.mu, 16) + ", |diff| = " + diff.str(3, std::ios_base::scientific);
  o.ok = diff < asymptotics::Real("1e-3");
}

void ac10(Outcome& o) {
  for (int n = 0; n <= 10; ++n)
    o.require(ferrers_iteration(n, 20) == ferrers_iteration_from_zero(n + 1, 20),
              "iterates differ at n = " + std::to_string(n));
  o.require(ferrers_iteration(21, 20) == xi_via_theta(20), "iteration does not stabilize to xi");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "xi coefficients 1,1,2,4,9,21,52,133,351,948 by all three methods", 1, ac1},
      {"AC2", "three methods agree exactly to order 200", 30, ac2},
      {"AC3", "A(t,q) and A~(t,q) match the reference expansions through q^7", 0, ac3},
      {"AC4", "exhaustive tree tables equal A and A~ for area <= 7", 60, ac4},
      {"AC5", "sigma-mixed refinements and their area marginals", 0, ac5},
      {"AC6", "identity suite", 0, ac6},
      {"AC7", "polyomino closed forms equal exhaustive enumeration, area <= 10", 0, ac7},
      {"AC8", "monotone coefficients below 200 and injection on areas <= 6", 0, ac8},
      {"AC9", "growth constant within 1e-3 from 300 coefficients", 60, ac9},
      {"AC10", "Ferrers-species iteration from 1 and from 0", 0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    failures += !o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << " " << c.title << " [" << timing << "]";
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
