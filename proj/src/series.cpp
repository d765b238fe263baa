#include "theta_root/series.hpp"

#include <sstream>

namespace theta_root {

TPoly::TPoly(const Integer& constant) {
  if (!theta_root::is_zero(constant)) coeffs_.push_back(constant);
}

TPoly::TPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::monomial(const Integer& c, int degree) {
  if (degree < 0) throw Error("negative t-degree");
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return TPoly(std::move(v));
}

Integer TPoly::operator[](int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[d];
}

Integer TPoly::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TPoly& TPoly::operator+=(const TPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  add_product(r, a, b);
  return r;
}

void add_product(TPoly& acc, const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (acc.coeffs_.size() < n) acc.coeffs_.resize(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) add_product(acc.coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
  }
  acc.trim();
}

void TPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Integer& c = coeffs_[d];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (sgn(c) < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (d == 0 || mag != 1) os << mag;
    if (d >= 1) os << 't';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

QSeries evaluate_t(const TQSeries& s, const Integer& value) {
  return s.map([&](const TPoly& p) { return p.evaluate(value); });
}

TQSeries lift(const QSeries& s) {
  return s.map([](const Integer& c) { return TPoly(c); });
}

}  // namespace theta_root
