#include "theta_root/theta.hpp"

#include <utility>
#include <vector>

namespace theta_root {
namespace {

int triangular(int n) { return n * (n - 1) / 2; }

int floor_sqrt(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Iterates `step` from `start` until two successive iterates agree. Each step
// fixes at least one further coefficient, so order + 2 evaluations suffice.
template <class S, class Step>
S fixed_point(S start, int order, Step&& step) {
  S current = std::move(start);
  for (int i = 0; i < order + 2; ++i) {
    S next = step(current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw Error("fixed-point iteration did not converge");
}

template <class C>
Series<C> stack_gf_impl(const Series<C>& a_in, int order) {
  if (a_in.order() < order) throw Error("argument series has insufficient order");
  const auto a = a_in.truncated(order);
  auto sum = Series<C>::one(order);
  // term holds 1 / ((q;q)_n (aq;q)_{n-1}); only order - n coefficients are
  // needed once it is multiplied by q^n.
  auto term = Series<C>::one(order);
  for (int n = 1; n <= order; ++n) {
    term = div_one_minus_qk(std::move(term), n);
    if (n >= 2) term = div_one_minus_shifted(term, a, n - 1);
    term = term.truncated(order - n);
    sum.add_shifted(term, n);
  }
  return sum;
}

template <class C>
Series<C> ferrers_gf_impl(const Series<C>& a_in, int order) {
  if (a_in.order() < order) throw Error("argument series has insufficient order");
  const auto a = a_in.truncated(order);
  auto sum = Series<C>::one(order);
  auto term = Series<C>::one(order);
  auto power = Series<C>::one(order);
  for (int n = 1; n * n <= order; ++n) {
    const int rest = order - n * n;
    term = div_one_minus_qk(std::move(term), n);
    if (n >= 2) term = div_one_minus_shifted(term, a, n - 1);
    term = term.truncated(rest);
    power = (power * a).truncated(rest);
    sum.add_shifted(power * term, n * n);
  }
  return sum;
}

template <class Map>
TQSeries tree_gf(int order, Map&& species_gf) {
  const auto t = TPoly::t();
  return fixed_point(TQSeries::monomial(t, 0, order), order,
                     [&](const TQSeries& a) { return t * species_gf(a, order); });
}

}  // namespace

XQSeries theta0(int x_order, int q_order) {
  XQSeries s(x_order, q_order);
  for (int n = 0; n <= x_order && triangular(n) <= q_order; ++n) s.at(n, triangular(n)) = 1;
  return s;
}

XQSeries identity_first_rhs(int x_order, int q_order) {
  const auto q = XQSeries::monomial(1, 0, 1, x_order, q_order);
  const auto minus_x = XQSeries::monomial(-1, 1, 0, x_order, q_order);
  const auto one = XQSeries::one(x_order, q_order);

  XQSeries sum(x_order, q_order);
  auto inv_qq = one;  // 1 / (q;q)_n
  auto inv_xq = one;  // 1 / (-x;q)_n
  for (int n = 0; n <= q_order; ++n) {
    if (n >= 1) {
      inv_qq = inv_qq * reciprocal(one - q.shifted_q(n - 1));
      inv_xq = inv_xq * reciprocal(one - minus_x.shifted_q(n - 1));
    }
    sum += (inv_qq * inv_xq).shifted_q(n);
  }
  return pochhammer_infinite(q) * pochhammer_infinite(minus_x) * sum;
}

XQSeries identity_second_rhs(int x_order, int q_order) {
  const auto q = XQSeries::monomial(1, 0, 1, x_order, q_order);
  const auto minus_x = XQSeries::monomial(-1, 1, 0, x_order, q_order);
  const auto one = XQSeries::one(x_order, q_order);

  XQSeries sum(x_order, q_order);
  auto inv_qq = one;
  auto inv_xq = one;
  auto power = one;  // (-x)^n
  const int terms = floor_sqrt(q_order) + x_order;
  for (int n = 0; n <= terms; ++n) {
    if (n >= 1) {
      inv_qq = inv_qq * reciprocal(one - q.shifted_q(n - 1));
      inv_xq = inv_xq * reciprocal(one - minus_x.shifted_q(n - 1));
      power = power * minus_x;
    }
    if (n * n > q_order) continue;
    sum += (power * inv_qq * inv_xq).shifted_q(n * n);
  }
  return pochhammer_infinite(minus_x) * sum;
}

bool verify_identity_first(const XQSeries& lhs) {
  return lhs == identity_first_rhs(lhs.x_order(), lhs.q_order());
}

bool verify_identity_second(const XQSeries& lhs) {
  return lhs == identity_second_rhs(lhs.x_order(), lhs.q_order());
}

bool verify_identity_first(int x_order, int q_order) { return verify_identity_first(theta0(x_order, q_order)); }

bool verify_identity_second(int x_order, int q_order) { return verify_identity_second(theta0(x_order, q_order)); }

QSeries theta_at_negated(const QSeries& xi) {
  const int order = xi.order();
  const QSeries minus_xi = -xi;
  QSeries sum(order);
  auto power = QSeries::one(order);
  for (int n = 0; triangular(n) <= order; ++n) {
    if (n >= 1) power = power * minus_xi;
    sum.add_shifted(power, triangular(n));
  }
  return sum;
}

QSeries xi_via_theta(int order) {
  if (order < 0) throw Error("series order must be non-negative");
  // [q^k] Theta0(-xi, q) = -xi_k + sum_{n>=2} (-1)^n [q^(k - n(n-1)/2)] xi^n for
  // k >= 1, and the powers on the right only involve xi_0..xi_{k-1}.
  int max_power = 1;
  while (triangular(max_power + 1) <= order) ++max_power;

  std::vector<Integer> xi(order + 1);
  // powers[n][k] = [q^k] xi^n, kept up to index order - n(n-1)/2.
  std::vector<std::vector<Integer>> powers(max_power + 1);
  for (int n = 1; n <= max_power; ++n) powers[n].resize(order - triangular(n) + 1);

  for (int k = 0; k <= order; ++k) {
    if (k == 0) {
      xi[0] = 1;
    } else {
      Integer acc = 0;
      for (int n = 2; n <= max_power && triangular(n) <= k; ++n) {
        if (n % 2 == 0) {
          acc += powers[n][k - triangular(n)];
        } else {
          acc -= powers[n][k - triangular(n)];
        }
      }
      xi[k] = acc;
    }
    powers[1][k] = xi[k];
    for (int n = 2; n <= max_power && k <= order - triangular(n); ++n) {
      Integer acc = 0;
      for (int j = 0; j <= k; ++j) add_product(acc, xi[j], powers[n - 1][k - j]);
      powers[n][k] = std::move(acc);
    }
  }
  return QSeries(order, std::move(xi));
}

QSeries xi_fix1(int order) {
  return fixed_point(QSeries::one(order), order, [&](const QSeries& x) { return stack_species_gf(x, order); });
}

QSeries xi_fix2(int order) {
  return fixed_point(QSeries::one(order), order, [&](const QSeries& x) { return ferrers_species_gf(x, order); });
}

QSeries xi(int order, XiMethod method) {
  switch (method) {
    case XiMethod::theta: return xi_via_theta(order);
    case XiMethod::fix1: return xi_fix1(order);
    case XiMethod::fix2: return xi_fix2(order);
  }
  throw Error("unknown method");
}

QSeries stack_species_gf(const QSeries& a, int order) { return stack_gf_impl(a, order); }
TQSeries stack_species_gf(const TQSeries& a, int order) { return stack_gf_impl(a, order); }
QSeries ferrers_species_gf(const QSeries& a, int order) { return ferrers_gf_impl(a, order); }
TQSeries ferrers_species_gf(const TQSeries& a, int order) { return ferrers_gf_impl(a, order); }

TQSeries stack_tree_gf(int order) {
  return tree_gf(order, [](const TQSeries& a, int o) { return stack_species_gf(a, o); });
}

TQSeries ferrers_tree_gf(int order) {
  return tree_gf(order, [](const TQSeries& a, int o) { return ferrers_species_gf(a, o); });
}

TQSeries mixed_tree_gf(const SigmaWord& sigma, int order) {
  if (sigma.empty()) throw Error("empty sigma word");
  const auto t = TPoly::t();
  TQSeries value(order);
  const auto& letters = sigma.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    value = t * (*it == Species::stack ? stack_species_gf(value, order) : ferrers_species_gf(value, order));
  }
  return value;
}

QSeries ferrers_iteration(int n, int order) {
  if (n < 0) throw Error("iteration count must be non-negative");
  auto value = QSeries::one(order);
  for (int i = 0; i < n; ++i) value = ferrers_species_gf(value, order);
  return value;
}

QSeries ferrers_iteration_from_zero(int n, int order) {
  if (n < 0) throw Error("iteration count must be non-negative");
  QSeries value(order);
  for (int i = 0; i < n; ++i) value = ferrers_species_gf(value, order);
  return value;
}

}  // namespace theta_root
