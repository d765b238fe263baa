#pragma once

#include <ostream>
#include <vector>

#include "theta_root/series.hpp"

namespace theta_root {

// Dense series in two variables, exact modulo x^(x_order+1) and
// q^(q_order+1). Entry (m, k) holds [x^m q^k].
class XQSeries {
 public:
  XQSeries(int x_order, int q_order);

  static XQSeries one(int x_order, int q_order);
  static XQSeries monomial(const Integer& c, int x_exp, int q_exp, int x_order, int q_order);

  int x_order() const { return x_order_; }
  int q_order() const { return q_order_; }

  const Integer& at(int m, int k) const { return cells_.at(index(m, k)); }
  Integer& at(int m, int k) { return cells_.at(index(m, k)); }

  bool is_zero() const;
  XQSeries truncated(int x_order, int q_order) const;
  // Multiplication by q^k.
  XQSeries shifted_q(int k) const;

  XQSeries& operator+=(const XQSeries& b);
  XQSeries& operator-=(const XQSeries& b);
  XQSeries operator-() const;
  friend XQSeries operator+(XQSeries a, const XQSeries& b) { return a += b; }
  friend XQSeries operator-(XQSeries a, const XQSeries& b) { return a -= b; }
  friend XQSeries operator*(const XQSeries& a, const XQSeries& b);
  friend bool operator==(const XQSeries& a, const XQSeries& b) = default;

 private:
  std::size_t index(int m, int k) const;

  int x_order_;
  int q_order_;
  std::vector<Integer> cells_;
};

std::ostream& operator<<(std::ostream& os, const XQSeries& s);

XQSeries add(const XQSeries& a, const XQSeries& b);
XQSeries mul(const XQSeries& a, const XQSeries& b);
XQSeries reciprocal(const XQSeries& a);
XQSeries pochhammer(const XQSeries& t0, int n);
// Needs [x^0 q^0] t0 == 0; factors beyond q_order are identically one.
XQSeries pochhammer_infinite(const XQSeries& t0);

}  // namespace theta_root
