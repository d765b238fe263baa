#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "theta_root/theta.hpp"

namespace theta_root::cli {

enum class Command { xi, refine, sigma, stacks, ferrers, trees, mu, verify };
enum class Format { json, csv, plain, dot };

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::xi;
  // Unset values take per-command defaults: order 30 for series commands,
  // 300 for mu, 50 for verify; max_area 7 for trees, 10 for shape tables.
  std::optional<int> order;
  std::optional<int> max_area;
  XiMethod method = XiMethod::theta;
  // Finite prefix, extended periodically by its last letter.
  std::string sigma_word = "0";
  std::optional<Format> format;
  std::optional<std::string> out_path;
  // ferrers: keep only diagrams with m_n = n for some n.
  bool durfee = true;
  // verify: perturb the check with this index to prove it can fail.
  std::optional<int> inject_fault;
};

struct VerifyCheck {
  std::string name;
  // Evaluates the check; with `perturb` set, one computed coefficient is
  // altered before the comparison.
  std::function<bool(bool perturb)> run;
};

/// The verify suite at the given series order, in fixed report order.
std::vector<VerifyCheck> verify_checks(int order);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and dispatches to run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace theta_root::cli
