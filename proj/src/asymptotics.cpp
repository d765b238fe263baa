#include "theta_root/asymptotics.hpp"

#include <cstdlib>
#include <ios>
#include <string>
#include <vector>

namespace theta_root::asymptotics {
namespace {

constexpr double kStableDrift = 1e-6;

// Sets the default MPFR precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) { Real::default_precision(digits); }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Integer& z) { return Real(z.get_mpz_t()); }

void check_window(std::span<const Integer> coeffs, Window window, int depth) {
  if (depth < 0) throw Error("extrapolation depth must be non-negative");
  if (window.first < 1 || window.last < window.first + depth + 1) throw Error("window too small for extrapolation");
  if (window.last < 20) throw Error("window must reach n >= 20");
  if (window.last >= static_cast<int>(coeffs.size())) throw Error("insufficient coefficients");
  for (int n = window.first; n <= window.last; ++n)
    if (sgn(coeffs[n]) <= 0) throw Error("model violated");
}

// Neville-form Richardson extrapolation to 1/n -> 0 for values v[i] sampled at
// n = first + i. Returns the table levels 0..depth.
std::vector<std::vector<Real>> richardson(std::vector<Real> values, int first, int depth) {
  std::vector<std::vector<Real>> levels{std::move(values)};
  for (int k = 1; k <= depth; ++k) {
    const auto& prev = levels.back();
    std::vector<Real> next;
    next.reserve(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
      const long n = first + static_cast<long>(i);
      next.push_back(((n + k) * prev[i + 1] - n * prev[i]) / k);
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

unsigned working_digits() {
  if (const char* env = std::getenv("THETA_ROOT_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return kDefaultDigits;
}

GrowthEstimate estimate_mu(std::span<const Integer> coeffs, Window window, int depth) {
  check_window(coeffs, window, depth);
  PrecisionGuard guard(working_digits());
  std::vector<Real> ratios;
  for (int n = window.first; n < window.last; ++n) ratios.push_back(to_real(coeffs[n + 1]) / to_real(coeffs[n]));
  const auto levels = richardson(std::move(ratios), window.first, depth);

  GrowthEstimate est;
  est.window = window;
  est.depth = depth;
  est.mu = levels[depth].back();
  est.residual = depth == 0 ? Real(abs(levels[0].back() - levels[0][levels[0].size() - 2]))
                            : Real(abs(levels[depth].back() - levels[depth - 1].back()));
  return est;
}

GrowthEstimate estimate_mu(const QSeries& coeffs, Window window, int depth) {
  return estimate_mu(coeffs.coeffs(), window, depth);
}

AmplitudeEstimate amplitude_estimate(std::span<const Integer> coeffs, const Real& mu, Window window, int depth) {
  check_window(coeffs, window, depth);
  if (mu <= 1) throw Error("growth rate must exceed 1");
  PrecisionGuard guard(working_digits());
  std::vector<Real> values;
  const Real mu_p(mu);
  for (int n = window.first; n <= window.last; ++n) {
    const Real nn(n);
    values.push_back(to_real(coeffs[n]) / pow(mu_p, nn) * nn * sqrt(nn));
  }
  const auto levels = richardson(std::move(values), window.first, depth);
  const auto& top = levels[depth];

  AmplitudeEstimate est;
  est.amplitude = top.back();
  est.drift = abs(top.back() - top[top.size() - 2]) / abs(top.back());
  est.stable = est.drift < kStableDrift;
  return est;
}

AmplitudeEstimate amplitude_estimate(const QSeries& coeffs, const Real& mu, Window window, int depth) {
  return amplitude_estimate(coeffs.coeffs(), mu, window, depth);
}

std::string to_string(const Real& x, int digits) { return x.str(digits, std::ios_base::fixed); }

}  // namespace theta_root::asymptotics
