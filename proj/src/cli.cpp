#include "theta_root/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "theta_root/asymptotics.hpp"
#include "theta_root/polyomino.hpp"
#include "theta_root/series_json.hpp"
#include "theta_root/trees.hpp"

namespace theta_root::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultSeriesOrder = 30;
constexpr int kDefaultMuOrder = 300;
constexpr int kDefaultVerifyOrder = 50;
constexpr int kDefaultTreeArea = 7;
constexpr int kDefaultShapeArea = 10;
constexpr int kMaxDotArea = 5;

const char* format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::plain: return "plain";
    case Format::dot: return "dot";
  }
  return "?";
}

Format pick_format(const RunConfig& c, Format fallback, std::initializer_list<Format> allowed) {
  const Format f = c.format.value_or(fallback);
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw UsageError(std::string("format '") + format_name(f) + "' is not available for this command");
  return f;
}

int non_negative(std::optional<int> v, int fallback, const char* what) {
  const int x = v.value_or(fallback);
  if (x < 0) throw UsageError(std::string(what) + " must be non-negative");
  return x;
}

SigmaWord parse_sigma(const std::string& text) {
  SigmaWord w;
  try {
    w = SigmaWord::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (w.empty()) throw UsageError("empty sigma word");
  return w;
}

// ---------------------------------------------------------------------------
// Output helpers

void write_series(std::ostream& os, const QSeries& s, Format f) {
  if (f == Format::json) {
    os << to_json(s).dump() << '\n';
  } else if (f == Format::csv) {
    os << "n,coeff\n";
    for (int k = 0; k <= s.order(); ++k) os << k << ',' << s[k] << '\n';
  } else {
    for (int k = 0; k <= s.order(); ++k) os << (k ? " " : "") << s[k];
    os << '\n';
  }
}

void write_tq_lines(std::ostream& os, const TQSeries& s) {
  for (int k = 0; k <= s.order(); ++k) os << "q^" << k << ": " << s[k] << '\n';
}

void write_tq_csv(std::ostream& os, const TQSeries& s, bool header = true) {
  if (header) os << "q_power,t_power,coeff\n";
  for (int k = 0; k <= s.order(); ++k)
    for (int d = 0; d <= s[k].degree(); ++d)
      if (sgn(s[k][d]) != 0) os << k << ',' << d << ',' << s[k][d] << '\n';
}

void write_shape_table(std::ostream& os, const polyomino::CountTable& table, bool with_rise, Format f) {
  if (f == Format::json) {
    auto rows = nlohmann::json::array();
    for (const auto& [k, count] : table) {
      nlohmann::json row = {{"area", k.area}, {"width", k.width}, {"height", k.height}, {"count", count.get_str()}};
      if (with_rise) row["rise"] = k.rise;
      rows.push_back(std::move(row));
    }
    os << rows.dump() << '\n';
    return;
  }
  os << (with_rise ? "area,width,height,rise,count\n" : "area,width,height,count\n");
  for (const auto& [k, count] : table) {
    os << k.area << ',' << k.width << ',' << k.height << ',';
    if (with_rise) os << k.rise << ',';
    os << count << '\n';
  }
}

// ---------------------------------------------------------------------------
// Commands

void cmd_xi(const RunConfig& c, std::ostream& os) {
  const int order = non_negative(c.order, kDefaultSeriesOrder, "order");
  const Format f = pick_format(c, Format::json, {Format::json, Format::csv, Format::plain});
  write_series(os, xi(order, c.method), f);
}

void cmd_refine(const RunConfig& c, std::ostream& os) {
  const int order = non_negative(c.order, kDefaultSeriesOrder, "order");
  const Format f = pick_format(c, Format::json, {Format::json, Format::csv, Format::plain});
  const auto a = stack_tree_gf(order);
  const auto at = ferrers_tree_gf(order);
  if (f == Format::json) {
    os << nlohmann::json{{"A", to_json(a)}, {"Atilde", to_json(at)}}.dump() << '\n';
  } else if (f == Format::csv) {
    os << "series,q_power,t_power,coeff\n";
    for (const auto& [name, s] : {std::pair{"A", &a}, std::pair{"Atilde", &at}})
      for (int k = 0; k <= s->order(); ++k)
        for (int d = 0; d <= (*s)[k].degree(); ++d)
          if (sgn((*s)[k][d]) != 0) os << name << ',' << k << ',' << d << ',' << (*s)[k][d] << '\n';
  } else {
    os << "A(t,q)\n";
    write_tq_lines(os, a);
    os << "Atilde(t,q)\n";
    write_tq_lines(os, at);
  }
}

void cmd_sigma(const RunConfig& c, std::ostream& os) {
  const int order = non_negative(c.order, kDefaultSeriesOrder, "order");
  const Format f = pick_format(c, Format::json, {Format::json, Format::csv, Format::plain});
  // Trees of area <= order have height <= order, so order + 1 letters suffice.
  const auto word = parse_sigma(c.sigma_word).extended(order + 1);
  const auto s = mixed_tree_gf(word, order);
  if (f == Format::json) {
    auto j = to_json(s);
    j["sigma"] = word.to_string();
    os << j.dump() << '\n';
  } else if (f == Format::csv) {
    write_tq_csv(os, s);
  } else {
    write_tq_lines(os, s);
  }
}

void cmd_stacks(const RunConfig& c, std::ostream& os) {
  const int max_area = non_negative(c.max_area, kDefaultShapeArea, "max-area");
  const Format f = pick_format(c, Format::csv, {Format::csv, Format::json});
  write_shape_table(os, polyomino::enumerate_stacks(max_area), true, f);
}

void cmd_ferrers(const RunConfig& c, std::ostream& os) {
  const int max_area = non_negative(c.max_area, kDefaultShapeArea, "max-area");
  const Format f = pick_format(c, Format::csv, {Format::csv, Format::json});
  write_shape_table(os, polyomino::enumerate_ferrers(max_area, c.durfee), false, f);
}

void cmd_trees(const RunConfig& c, std::ostream& os) {
  const int max_area = non_negative(c.max_area, kDefaultTreeArea, "max-area");
  const Format f = pick_format(c, Format::csv, {Format::csv, Format::json, Format::dot});
  const auto word = parse_sigma(c.sigma_word);
  if (f == Format::dot) {
    if (max_area > kMaxDotArea) throw UsageError("dot output is limited to max-area <= 5");
    std::vector<trees::EnrichedTree> all;
    for (int a = 0; a <= max_area; ++a) {
      auto batch = trees::materialize_trees(word, a);
      all.insert(all.end(), batch.begin(), batch.end());
    }
    os << trees::to_dot(all);
    return;
  }
  const auto table = trees::enumerate_trees(word, max_area);
  if (f == Format::json) {
    auto rows = nlohmann::json::array();
    for (const auto& [key, count] : table)
      rows.push_back({{"area", key.first}, {"vertices", key.second}, {"count", count.get_str()}});
    os << rows.dump() << '\n';
    return;
  }
  os << "area,vertices,count\n";
  for (const auto& [key, count] : table) os << key.first << ',' << key.second << ',' << count << '\n';
}

void cmd_mu(const RunConfig& c, std::ostream& os) {
  const int order = non_negative(c.order, kDefaultMuOrder, "order");
  const Format f = pick_format(c, Format::plain, {Format::plain, Format::json});
  const asymptotics::Window window{std::max(1, order / 3), order};
  const auto coeffs = xi_via_theta(order);
  const auto est = asymptotics::estimate_mu(coeffs, window);
  const auto amp = asymptotics::amplitude_estimate(coeffs, est.mu, window);
  const asymptotics::Real reference(std::string(asymptotics::kReferenceMu));
  const asymptotics::Real diff = abs(est.mu - reference);
  if (f == Format::json) {
    os << nlohmann::json{{"mu", asymptotics::to_string(est.mu, 30)},
                         {"residual", est.residual.str(6, std::ios_base::scientific)},
                         {"window", {window.first, window.last}},
                         {"depth", est.depth},
                         {"model_exponent", est.model_exponent},
                         {"reference_mu", std::string(asymptotics::kReferenceMu)},
                         {"difference", diff.str(6, std::ios_base::scientific)},
                         {"amplitude", asymptotics::to_string(amp.amplitude, 20)},
                         {"amplitude_stable", amp.stable}}
              .dump()
       << '\n';
    return;
  }
  os << "mu estimate    " << asymptotics::to_string(est.mu, 30) << '\n'
     << "reference mu   " << asymptotics::kReferenceMu << '\n'
     << "difference     " << diff.str(6, std::ios_base::scientific) << '\n'
     << "residual       " << est.residual.str(6, std::ios_base::scientific) << '\n'
     << "window         [" << window.first << ", " << window.last << "]\n"
     << "depth          " << est.depth << '\n'
     << "amplitude      " << asymptotics::to_string(amp.amplitude, 20) << (amp.stable ? " (stable)" : " (unstable)")
     << '\n';
}

int cmd_verify(const RunConfig& c, std::ostream& os) {
  const int order = non_negative(c.order, kDefaultVerifyOrder, "order");
  pick_format(c, Format::plain, {Format::plain});
  const auto checks = verify_checks(order);
  if (c.inject_fault && (*c.inject_fault < 0 || *c.inject_fault >= static_cast<int>(checks.size())))
    throw UsageError("inject-fault index out of range");
  int passed = 0;
  for (int i = 0; i < static_cast<int>(checks.size()); ++i) {
    bool ok = false;
    try {
      ok = checks[i].run(c.inject_fault == i);
    } catch (const Error&) {
      ok = false;
    }
    passed += ok;
    os << (ok ? "PASS " : "FAIL ") << checks[i].name << '\n';
  }
  os << "verify: " << passed << "/" << checks.size() << " checks passed at order " << order << '\n';
  return passed == static_cast<int>(checks.size()) ? kExitOk : kExitComputation;
}

// ---------------------------------------------------------------------------
// Verify suite helpers

template <class S>
S bumped(S s, bool perturb) {
  if (perturb) {
    auto c = s[s.order()];
    c += 1;
    s.set(s.order(), c);
  }
  return s;
}

polyomino::CountTable bumped(polyomino::CountTable t, bool perturb) {
  if (perturb) t[polyomino::ShapeKey{1, 1, 1, 0}] += 1;
  return t;
}

}  // namespace

std::vector<VerifyCheck> verify_checks(int order) {
  using polyomino::restricted;
  const int shape_area = std::min(order, 10);
  const int tree_area = std::min(order, 7);
  const int injection_area = std::min(order, 6);
  const int iteration_order = std::min(order, 20);
  auto shared_xi = std::make_shared<QSeries>(xi_via_theta(order));

  std::vector<VerifyCheck> checks;
  checks.push_back({"xi: theta, fix1 and fix2 methods agree", [=](bool p) {
                      const auto a = bumped(xi_fix1(order), p);
                      return a == *shared_xi && xi_fix2(order) == *shared_xi;
                    }});
  checks.push_back({"xi: leading coefficients 1 1 2 4 9 21 52 133 351 948", [=](bool p) {
                      const std::vector<int> known{1, 1, 2, 4, 9, 21, 52, 133, 351, 948};
                      const int n = std::min(order, 9);
                      const auto s = bumped(shared_xi->truncated(n), p);
                      for (int k = 0; k <= n; ++k)
                        if (s[k] != known[k]) return false;
                      return true;
                    }});
  checks.push_back({"xi: Theta0(-xi, q) vanishes", [=](bool p) {
                      return theta_at_negated(bumped(*shared_xi, p)).is_zero();
                    }});
  checks.push_back({"identity: first product form at (8,16)", [](bool p) {
                      auto lhs = theta0(8, 16);
                      if (p) lhs.at(0, 0) += 1;
                      return verify_identity_first(lhs);
                    }});
  checks.push_back({"identity: second product form at (8,16)", [](bool p) {
                      auto lhs = theta0(8, 16);
                      if (p) lhs.at(0, 0) += 1;
                      return verify_identity_second(lhs);
                    }});
  checks.push_back({"xi: fixed point of the stack species F", [=](bool p) {
                      return bumped(stack_species_gf(*shared_xi, order), p) == *shared_xi;
                    }});
  checks.push_back({"xi: fixed point of the Ferrers species F~", [=](bool p) {
                      return bumped(ferrers_species_gf(*shared_xi, order), p) == *shared_xi;
                    }});
  checks.push_back({"xi: two-fold compositions of F and F~", [=](bool p) {
                      const auto& x = *shared_xi;
                      const auto f = [&](const QSeries& a) { return stack_species_gf(a, order); };
                      const auto g = [&](const QSeries& a) { return ferrers_species_gf(a, order); };
                      return bumped(f(g(x)), p) == x && g(f(x)) == x && f(f(x)) == x && g(g(x)) == x;
                    }});
  checks.push_back({"refinement: A(1,q) equals xi", [=](bool p) {
                      return bumped(evaluate_t(stack_tree_gf(order)), p) == *shared_xi;
                    }});
  checks.push_back({"refinement: A~(1,q) equals xi", [=](bool p) {
                      return bumped(evaluate_t(ferrers_tree_gf(order)), p) == *shared_xi;
                    }});
  checks.push_back({"sigma: mixed enrichments at t=1 equal xi", [=](bool p) {
                      // Bivariate series are costly; the marginal is checked at a
                      // capped order.
                      const int n = iteration_order;
                      for (const char* w : {"01", "10", "0110", "1100", "1"}) {
                        const auto word = SigmaWord::parse(w).extended(n + 1);
                        if (bumped(evaluate_t(mixed_tree_gf(word, n)), p) != shared_xi->truncated(n)) return false;
                      }
                      return true;
                    }});
  checks.push_back({"xi: coefficients are monotone", [=](bool p) {
                      auto s = *shared_xi;
                      if (p && order >= 1) s.set(order, s[order - 1] - 1);
                      for (int k = 0; k < order; ++k)
                        if (s[k + 1] < s[k]) return false;
                      return true;
                    }});
  checks.push_back({"stacks: closed sum equals exhaustive enumeration", [=](bool p) {
                      const int a = shape_area;
                      return bumped(restricted(polyomino::stack_gf_closed(a, a, a, a), a), p) ==
                             restricted(polyomino::enumerate_stacks(a), a);
                    }});
  checks.push_back({"stacks: functional equation equals closed sum", [=](bool p) {
                      const int a = shape_area;
                      return bumped(restricted(polyomino::stack_gf_functional(a, a, a, a), a), p) ==
                             restricted(polyomino::stack_gf_closed(a, a, a, a), a);
                    }});
  checks.push_back({"ferrers: width and Durfee-square sums agree", [=](bool p) {
                      const int a = shape_area;
                      const auto forms = polyomino::ferrers_gf_two_forms(a, a, a);
                      return bumped(forms.by_width, p) == forms.by_durfee &&
                             restricted(forms.by_width, a) == restricted(polyomino::enumerate_ferrers(a, false), a);
                    }});
  checks.push_back({"ferrers: constrained sum equals exhaustive enumeration", [=](bool p) {
                      const int a = shape_area;
                      return bumped(restricted(polyomino::ferrers_gf_constrained(a, a, a), a), p) ==
                             restricted(polyomino::enumerate_ferrers(a, true), a);
                    }});
  checks.push_back({"ferrers: unconstrained counts equal 1/(q;q)_inf", [=](bool p) {
                      const int a = shape_area;
                      const auto euler = pochhammer_infinite(QSeries::monomial(1, 1, a), a);
                      auto partitions = reciprocal(euler);
                      const auto table = polyomino::enumerate_ferrers(a, false);
                      partitions = bumped(partitions, p);
                      for (int k = 1; k <= a; ++k)
                        if (polyomino::area_total(table, k) != partitions[k]) return false;
                      return partitions[0] == 1;
                    }});
  checks.push_back({"trees: stack-enriched counts equal A(t,q)", [=](bool p) {
                      const auto table = trees::enumerate_trees(SigmaWord::parse("0"), tree_area);
                      return bumped(trees::as_series(table, tree_area), p) == stack_tree_gf(tree_area);
                    }});
  checks.push_back({"trees: Ferrers-enriched counts equal A~(t,q)", [=](bool p) {
                      const auto table = trees::enumerate_trees(SigmaWord::parse("1"), tree_area);
                      return bumped(trees::as_series(table, tree_area), p) == ferrers_tree_gf(tree_area);
                    }});
  checks.push_back({"trees: injection raises area by one and is injective", [=](bool p) {
                      const auto word = SigmaWord::parse("0");
                      for (int a = 0; a <= injection_area; ++a) {
                        const auto all = trees::materialize_trees(word, a);
                        std::set<std::string> images;
                        for (const auto& t : all) {
                          const auto image = trees::injection_step(t);
                          if (image.area() != a + 1 || !trees::respects_species(image, word)) return false;
                          images.insert(trees::canonical_encoding(image));
                        }
                        if (images.size() + (p ? 1 : 0) != all.size()) return false;
                      }
                      return true;
                    }});
  checks.push_back({"iteration: (F~)^n(1) equals (F~)^(n+1)(0)", [=](bool p) {
                      for (int n = 0; n <= 10; ++n) {
                        const auto lhs = bumped(ferrers_iteration(n, iteration_order), p);
                        if (lhs != ferrers_iteration_from_zero(n + 1, iteration_order)) return false;
                      }
                      return ferrers_iteration(iteration_order + 1, iteration_order) ==
                             shared_xi->truncated(iteration_order);
                    }});
  return checks;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    if (config.out_path) {
      file.open(*config.out_path);
      if (!file) throw UsageError("cannot open '" + *config.out_path + "' for writing");
    }
    std::ostream& os = config.out_path ? static_cast<std::ostream&>(file) : out;
    int status = kExitOk;
    switch (config.command) {
      case Command::xi: cmd_xi(config, os); break;
      case Command::refine: cmd_refine(config, os); break;
      case Command::sigma: cmd_sigma(config, os); break;
      case Command::stacks: cmd_stacks(config, os); break;
      case Command::ferrers: cmd_ferrers(config, os); break;
      case Command::trees: cmd_trees(config, os); break;
      case Command::mu: cmd_mu(config, os); break;
      case Command::verify: status = cmd_verify(config, os); break;
    }
    os.flush();
    if (!os) throw Error("write failed");
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact series for the leading root of the partial theta function"};
  app.require_subcommand(1);
  RunConfig config;
  std::optional<std::string> out_path;

  const std::map<std::string, XiMethod> methods{
      {"theta", XiMethod::theta}, {"fix1", XiMethod::fix1}, {"fix2", XiMethod::fix2}};
  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}, {"dot", Format::dot}};

  struct Sub {
    Command command;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {Command::xi, "xi", "Coefficients of xi0(q)"},
      {Command::refine, "refine", "Tree refinements A(t,q) and A~(t,q)"},
      {Command::sigma, "sigma", "Level-mixed refinement A_sigma(t,q)"},
      {Command::stacks, "stacks", "Stack polyomino counts by area, width, height, rise"},
      {Command::ferrers, "ferrers", "Ferrers diagram counts by area, width, height"},
      {Command::trees, "trees", "Enriched tree counts by area and vertex count"},
      {Command::mu, "mu", "Growth-rate estimate for the coefficients of xi0(q)"},
      {Command::verify, "verify", "Run the identity, oracle and cross-method checks"},
  };

  std::optional<Format> format;
  std::optional<int> order;
  std::optional<int> max_area;
  std::optional<int> inject_fault;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&config, cmd = s.command] { config.command = cmd; });
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats))
        ->option_text("json|csv|plain|dot");
    sub->add_option("--out", out_path, "Write output to this file");
    switch (s.command) {
      case Command::xi:
        sub->add_option("--order", order, "Truncation order");
        sub->add_option("--method", config.method, "Solver for xi0")
            ->transform(CLI::CheckedTransformer(methods))
            ->option_text("theta|fix1|fix2");
        break;
      case Command::refine:
      case Command::mu:
        sub->add_option("--order", order, "Truncation order");
        break;
      case Command::sigma:
        sub->add_option("--order", order, "Truncation order");
        sub->add_option("--sigma", config.sigma_word, "Species word over {0,1}")->required();
        break;
      case Command::stacks:
        sub->add_option("--max-area", max_area, "Largest area enumerated");
        break;
      case Command::ferrers:
        sub->add_option("--max-area", max_area, "Largest area enumerated");
        sub->add_flag("--durfee,!--no-durfee", config.durfee, "Keep only diagrams with m_n = n (default on)");
        break;
      case Command::trees:
        sub->add_option("--max-area", max_area, "Largest total area");
        sub->add_option("--sigma", config.sigma_word, "Species word over {0,1}");
        break;
      case Command::verify:
        sub->add_option("--order", order, "Series order for the checks");
        sub->add_option("--inject-fault", inject_fault)->group("");
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  config.format = format;
  config.order = order;
  config.max_area = max_area;
  config.inject_fault = inject_fault;
  config.out_path = out_path;
  return run(config, out, err);
}

}  // namespace theta_root::cli
