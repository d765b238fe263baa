#include "theta_root/xq_series.hpp"

#include <algorithm>

namespace theta_root {

XQSeries::XQSeries(int x_order, int q_order) : x_order_(x_order), q_order_(q_order) {
  if (x_order < 0 || q_order < 0) throw Error("series order must be non-negative");
  cells_.resize(static_cast<std::size_t>(x_order + 1) * static_cast<std::size_t>(q_order + 1));
}

XQSeries XQSeries::one(int x_order, int q_order) { return monomial(1, 0, 0, x_order, q_order); }

XQSeries XQSeries::monomial(const Integer& c, int x_exp, int q_exp, int x_order, int q_order) {
  XQSeries s(x_order, q_order);
  if (x_exp <= x_order && q_exp <= q_order) s.at(x_exp, q_exp) = c;
  return s;
}

std::size_t XQSeries::index(int m, int k) const {
  if (m < 0 || m > x_order_ || k < 0 || k > q_order_) throw Error("XQSeries index out of range");
  return static_cast<std::size_t>(m) * static_cast<std::size_t>(q_order_ + 1) + static_cast<std::size_t>(k);
}

bool XQSeries::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

XQSeries XQSeries::truncated(int x_order, int q_order) const {
  if (x_order > x_order_ || q_order > q_order_) throw Error("cannot raise the order of a truncated series");
  XQSeries r(x_order, q_order);
  for (int m = 0; m <= x_order; ++m)
    for (int k = 0; k <= q_order; ++k) r.at(m, k) = at(m, k);
  return r;
}

XQSeries XQSeries::shifted_q(int shift) const {
  XQSeries r(x_order_, q_order_);
  for (int m = 0; m <= x_order_; ++m)
    for (int k = shift; k <= q_order_; ++k) r.at(m, k) = at(m, k - shift);
  return r;
}

XQSeries& XQSeries::operator+=(const XQSeries& b) {
  XQSeries r = truncated(std::min(x_order_, b.x_order_), std::min(q_order_, b.q_order_));
  for (int m = 0; m <= r.x_order_; ++m)
    for (int k = 0; k <= r.q_order_; ++k) r.at(m, k) += b.at(m, k);
  return *this = std::move(r);
}

XQSeries& XQSeries::operator-=(const XQSeries& b) { return *this += -b; }

XQSeries XQSeries::operator-() const {
  XQSeries r = *this;
  for (auto& c : r.cells_) c = -c;
  return r;
}

XQSeries operator*(const XQSeries& a, const XQSeries& b) {
  const int xo = std::min(a.x_order_, b.x_order_);
  const int qo = std::min(a.q_order_, b.q_order_);
  XQSeries r(xo, qo);
  for (int m1 = 0; m1 <= xo; ++m1)
    for (int k1 = 0; k1 <= qo; ++k1) {
      const Integer& c = a.at(m1, k1);
      if (sgn(c) == 0) continue;
      for (int m2 = 0; m1 + m2 <= xo; ++m2)
        for (int k2 = 0; k1 + k2 <= qo; ++k2) add_product(r.at(m1 + m2, k1 + k2), c, b.at(m2, k2));
    }
  return r;
}

std::ostream& operator<<(std::ostream& os, const XQSeries& s) {
  os << "[x-order " << s.x_order() << ", q-order " << s.q_order() << ":";
  for (int m = 0; m <= s.x_order(); ++m)
    for (int k = 0; k <= s.q_order(); ++k)
      if (sgn(s.at(m, k)) != 0) os << ' ' << s.at(m, k) << "*x^" << m << "q^" << k;
  return os << ']';
}

XQSeries add(const XQSeries& a, const XQSeries& b) { return a + b; }
XQSeries mul(const XQSeries& a, const XQSeries& b) { return a * b; }

XQSeries reciprocal(const XQSeries& a) {
  const auto sign = unit_sign(a.at(0, 0));
  if (!sign) throw Error("non-invertible series");
  const int xo = a.x_order();
  const int qo = a.q_order();
  XQSeries b(xo, qo);
  // Cells are solved in lexicographic (m, k) order; every product term on the
  // right refers to an earlier cell.
  for (int m = 0; m <= xo; ++m)
    for (int k = 0; k <= qo; ++k) {
      if (m == 0 && k == 0) {
        b.at(0, 0) = *sign;
        continue;
      }
      Integer acc = 0;
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= k; ++j) {
          if (i == 0 && j == 0) continue;
          if (sgn(a.at(i, j)) != 0) add_product(acc, a.at(i, j), b.at(m - i, k - j));
        }
      b.at(m, k) = -(*sign) * acc;
    }
  return b;
}

XQSeries pochhammer(const XQSeries& t0, int n) {
  if (n < 0) throw Error("pochhammer length must be non-negative");
  auto result = XQSeries::one(t0.x_order(), t0.q_order());
  for (int i = 0; i < n; ++i) result -= result * t0.shifted_q(i);
  return result;
}

XQSeries pochhammer_infinite(const XQSeries& t0) {
  if (sgn(t0.at(0, 0)) != 0) throw Error("divergent infinite product");
  auto result = XQSeries::one(t0.x_order(), t0.q_order());
  for (int i = 0;; ++i) {
    auto factor = t0.shifted_q(i);
    if (factor.is_zero()) break;
    result -= result * factor;
  }
  return result;
}

}  // namespace theta_root
