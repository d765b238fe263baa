#pragma once

// Exact truncated formal power series in q.
//
// Series<C> stores the coefficients of q^0..q^order, so a value is exact
// modulo q^(order+1). The coefficient ring C is either the arbitrary
// precision integers (QSeries) or integer polynomials in t (TQSeries).
// Every binary operation returns a series of the smaller operand order.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "theta_root/error.hpp"

namespace theta_root {

using Integer = mpz_class;

/// Integer polynomial in t, index d holds [t^d]; trailing zeros are trimmed.
class TPoly {
 public:
  TPoly() = default;
  TPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  TPoly(long constant) : TPoly(Integer(constant)) {}  // NOLINT
  explicit TPoly(std::vector<Integer> coeffs);

  static TPoly t() { return monomial(1, 1); }
  static TPoly monomial(const Integer& c, int degree);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer operator[](int d) const;

  Integer evaluate(const Integer& t) const;

  TPoly& operator+=(const TPoly& other);
  TPoly& operator-=(const TPoly& other);
  TPoly& operator*=(const TPoly& other) { return *this = *this * other; }
  TPoly operator-() const;

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly& a, const TPoly& b) = default;

  // acc += a * b without a temporary product.
  friend void add_product(TPoly& acc, const TPoly& a, const TPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

inline bool is_zero(const Integer& c) { return sgn(c) == 0; }
inline bool is_zero(const TPoly& c) { return c.is_zero(); }

inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// +1 or -1 if c is a unit of the coefficient ring, nullopt otherwise.
inline std::optional<int> unit_sign(const Integer& c) {
  if (c == 1) return 1;
  if (c == -1) return -1;
  return std::nullopt;
}
inline std::optional<int> unit_sign(const TPoly& c) {
  if (c.degree() != 0) return std::nullopt;
  return unit_sign(c[0]);
}

template <class Coeff>
class Series {
 public:
  using coeff_type = Coeff;

  explicit Series(int order) : coeffs_(checked_size(order)) {}

  // Missing coefficients are zero; entries beyond `order` are dropped.
  Series(int order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order));
  }

  static Series one(int order) { return monomial(Coeff(1), 0, order); }

  static Series monomial(const Coeff& c, int exponent, int order) {
    Series s(order);
    if (exponent >= 0 && exponent <= order) s.coeffs_[exponent] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& operator[](int k) const { return coeffs_.at(k); }
  std::span<const Coeff> coeffs() const { return coeffs_; }
  void set(int k, Coeff c) { coeffs_.at(k) = std::move(c); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return theta_root::is_zero(c); });
  }

  Series truncated(int order) const {
    if (order > this->order()) throw Error("cannot raise the order of a truncated series");
    return Series(order, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  // Multiplication by q^k, keeping the order.
  Series shifted(int k) const {
    Series s(order());
    for (int i = k; i <= order(); ++i) s.coeffs_[i] = coeffs_[i - k];
    return s;
  }

  // this += r * q^k, dropping terms beyond this->order().
  Series& add_shifted(const Series& r, int k) {
    for (int i = 0; i <= r.order() && i + k <= order(); ++i) coeffs_[i + k] += r.coeffs_[i];
    return *this;
  }

  template <class F>
  auto map(F&& f) const {
    using R = std::decay_t<decltype(f(coeffs_[0]))>;
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Series<R>(order(), std::move(out));
  }

  Series& operator+=(const Series& b) {
    coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }
  Series& operator-=(const Series& b) {
    coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
  }
  Series operator-() const {
    Series s(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = -coeffs_[i];
    return s;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (theta_root::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= n; ++j) add_product(r.coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
    }
    return r;
  }

  friend Series operator*(const Coeff& c, const Series& a) {
    Series r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.coeffs_[i] = c * a.coeffs_[i];
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw Error("series order must be non-negative");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<Coeff> coeffs_;
};

using QSeries = Series<Integer>;
using TQSeries = Series<TPoly>;

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const Series<Coeff>& s) {
  os << "[order " << s.order() << ":";
  for (const auto& c : s.coeffs()) os << ' ' << c;
  return os << ']';
}

template <class Coeff>
Series<Coeff> add(const Series<Coeff>& a, const Series<Coeff>& b) {
  return a + b;
}

template <class Coeff>
Series<Coeff> mul(const Series<Coeff>& a, const Series<Coeff>& b) {
  return a * b;
}

template <class Coeff>
Series<Coeff> reciprocal(const Series<Coeff>& a) {
  const auto sign = unit_sign(a[0]);
  if (!sign) throw Error("non-invertible series");
  const Coeff inv0(*sign);
  std::vector<Coeff> b(a.order() + 1);
  b[0] = inv0;
  for (int k = 1; k <= a.order(); ++k) {
    Coeff acc;
    for (int j = 1; j <= k; ++j) {
      if (!is_zero(a[j])) add_product(acc, a[j], b[k - j]);
    }
    b[k] = -(inv0 * acc);
  }
  return Series<Coeff>(a.order(), std::move(b));
}

/// s / (1 - q^k) for k >= 1.
template <class Coeff>
Series<Coeff> div_one_minus_qk(Series<Coeff> s, int k) {
  if (k < 1) throw Error("div_one_minus_qk needs k >= 1");
  std::vector<Coeff> c(s.coeffs().begin(), s.coeffs().end());
  for (int i = k; i <= s.order(); ++i) c[i] += c[i - k];
  return Series<Coeff>(s.order(), std::move(c));
}

/// s / (1 - a q^k) for k >= 1, at order min(s.order, a.order).
template <class Coeff>
Series<Coeff> div_one_minus_shifted(const Series<Coeff>& s, const Series<Coeff>& a, int k) {
  if (k < 1) throw Error("div_one_minus_shifted needs k >= 1");
  const int n = std::min(s.order(), a.order());
  std::vector<Coeff> r(s.coeffs().begin(), s.coeffs().begin() + n + 1);
  // r_i = s_i + sum_j a_j r_{i-k-j}
  for (int i = k; i <= n; ++i) {
    for (int j = 0; j <= i - k; ++j) {
      if (!is_zero(a[j])) add_product(r[i], a[j], r[i - k - j]);
    }
  }
  return Series<Coeff>(n, std::move(r));
}

/// (t0; q)_n = prod_{i<n} (1 - t0 q^i) truncated at `order`.
template <class Coeff>
Series<Coeff> pochhammer(const Series<Coeff>& t0, int n, int order) {
  if (n < 0) throw Error("pochhammer length must be non-negative");
  if (t0.order() < order) throw Error("pochhammer argument has insufficient order");
  auto result = Series<Coeff>::one(order);
  const auto base = t0.truncated(order);
  for (int i = 0; i < n; ++i) result -= (result * base).shifted(i);
  return result;
}

/// (t0; q)_inf for t0 with zero constant term.
template <class Coeff>
Series<Coeff> pochhammer_infinite(const Series<Coeff>& t0, int order) {
  if (t0.order() < order) throw Error("pochhammer argument has insufficient order");
  if (!is_zero(t0[0])) throw Error("divergent infinite product");
  auto result = Series<Coeff>::one(order);
  const auto base = t0.truncated(order);
  for (int i = 0;; ++i) {
    auto factor = base.shifted(i);
    if (factor.is_zero()) break;
    result -= result * factor;
  }
  return result;
}

/// Substitutes t = value in every coefficient.
QSeries evaluate_t(const TQSeries& s, const Integer& value = 1);

/// Lifts an integer series to constant t-polynomial coefficients.
TQSeries lift(const QSeries& s);

}  // namespace theta_root
