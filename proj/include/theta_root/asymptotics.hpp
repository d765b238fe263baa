#pragma once

// Growth-rate estimation for coefficient sequences c_n ~ A mu^n n^(-3/2).
//
// The ratios r_n = c_(n+1)/c_n behave like mu (1 - 3/(2n) + O(1/n^2)), so
// iterated Richardson extrapolation in 1/n over the top of the window removes
// the algebraic correction terms one power at a time.

#include <span>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

#include "theta_root/series.hpp"

namespace theta_root::asymptotics {

using Real = boost::multiprecision::mpfr_float;

inline constexpr std::string_view kReferenceMu =
    "3.2336366652450763163646925293871348350211819091413196994020357434";

inline constexpr int kDefaultDepth = 3;
inline constexpr unsigned kDefaultDigits = 64;

// Decimal working precision: THETA_ROOT_PRECISION if set to a positive
// integer, kDefaultDigits otherwise.
unsigned working_digits();

/// Inclusive coefficient index range [first, last].
struct Window {
  int first = 0;
  int last = 0;
};

struct GrowthEstimate {
  Real mu;
  Window window;
  double model_exponent = -1.5;
  // |last extrapolation level - the level below it| at the top of the window.
  Real residual;
  int depth = kDefaultDepth;
};

struct AmplitudeEstimate {
  Real amplitude;
  // Relative change between the two topmost extrapolated values.
  Real drift;
  bool stable = false;
};

GrowthEstimate estimate_mu(std::span<const Integer> coeffs, Window window, int depth = kDefaultDepth);
GrowthEstimate estimate_mu(const QSeries& coeffs, Window window, int depth = kDefaultDepth);

// Extrapolates c_n mu^(-n) n^(3/2) over the window. `stable` is false when the
// sequence does not settle (drift above 1e-6), e.g. when the n^(-3/2) model
// does not apply.
AmplitudeEstimate amplitude_estimate(std::span<const Integer> coeffs, const Real& mu, Window window,
                                     int depth = kDefaultDepth);
AmplitudeEstimate amplitude_estimate(const QSeries& coeffs, const Real& mu, Window window,
                                     int depth = kDefaultDepth);

/// Fixed-point rendering with `digits` digits after the decimal point.
std::string to_string(const Real& x, int digits = 20);

}  // namespace theta_root::asymptotics
