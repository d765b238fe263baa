#pragma once

// The leading root xi0(q) of the partial theta function
//   Theta0(x, q) = sum_{n>=0} x^n q^(n(n-1)/2),
// i.e. the unique series with constant term 1 and Theta0(-xi0(q), q) = 0,
// together with its enriched-tree refinements in t.

#include "theta_root/series.hpp"
#include "theta_root/species.hpp"
#include "theta_root/xq_series.hpp"

namespace theta_root {

/// Theta0(x, q) truncated at x^x_order, q^q_order.
XQSeries theta0(int x_order, int q_order);

// Right-hand sides of the two product/sum representations of Theta0:
//   first:  (q;q)_inf (-x;q)_inf sum_n q^n / ((q;q)_n (-x;q)_n)
//   second: (-x;q)_inf sum_n q^(n^2) (-x)^n / ((q;q)_n (-x;q)_n)
XQSeries identity_first_rhs(int x_order, int q_order);
XQSeries identity_second_rhs(int x_order, int q_order);

bool verify_identity_first(int x_order, int q_order);
bool verify_identity_second(int x_order, int q_order);
// Compare a supplied left-hand side against the right-hand side at its orders.
bool verify_identity_first(const XQSeries& lhs);
bool verify_identity_second(const XQSeries& lhs);

/// Theta0(-xi, q) as a series in q. Zero exactly when xi is the leading root.
QSeries theta_at_negated(const QSeries& xi);

enum class XiMethod { theta, fix1, fix2 };

/// Solves Theta0(-xi, q) = 0 one coefficient at a time.
QSeries xi_via_theta(int order);
/// Fixed point of the stack-polyomino equation, iterated from xi = 1.
QSeries xi_fix1(int order);
/// Fixed point of the Durfee-square equation, iterated from xi = 1.
QSeries xi_fix2(int order);
QSeries xi(int order, XiMethod method);

// F(a, q) = 1 + sum_{n>=1} q^n / ((q;q)_n (aq;q)_{n-1}): stack polyominoes
// plus the empty one, a marking the rise.
QSeries stack_species_gf(const QSeries& a, int order);
TQSeries stack_species_gf(const TQSeries& a, int order);

// F~(a, q) = 1 + sum_{n>=1} a^n q^(n^2) / ((q;q)_n (aq;q)_{n-1}): Ferrers
// diagrams whose n-th row has length n, plus the empty one, a marking width.
QSeries ferrers_species_gf(const QSeries& a, int order);
TQSeries ferrers_species_gf(const TQSeries& a, int order);

/// A(t, q) = t F(A(t, q), q): stack-enriched trees by vertices (t) and area (q).
TQSeries stack_tree_gf(int order);
/// A~(t, q) = t F~(A~(t, q), q): Ferrers-enriched trees.
TQSeries ferrers_tree_gf(int order);

/// t F^(s0)(t F^(s1)(... t F^(sN)(0) ...)): trees of height <= N with
/// species s_i at level i. Throws on an empty word.
TQSeries mixed_tree_gf(const SigmaWord& sigma, int order);

/// (F~)^n applied to the constant series 1 (at t = 1).
QSeries ferrers_iteration(int n, int order);
/// (F~)^n applied to the zero series.
QSeries ferrers_iteration_from_zero(int n, int order);

}  // namespace theta_root
