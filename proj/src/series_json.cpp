#include "theta_root/series_json.hpp"

#include <string>

namespace theta_root {
namespace {

Integer parse_integer(const nlohmann::json& j) {
  if (!j.is_string()) throw Error("series coefficient must be decimal text");
  Integer v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw Error("malformed integer '" + j.get<std::string>() + "'");
  return v;
}

nlohmann::json poly_json(const TPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

int parse_header(const nlohmann::json& j) {
  if (!j.is_object() || j.value("var", "") != "q") throw Error("expected a series object with \"var\":\"q\"");
  if (!j.contains("order") || !j["order"].is_number_integer() || !j.contains("coeffs"))
    throw Error("series object needs integer \"order\" and \"coeffs\"");
  const int order = j["order"].get<int>();
  if (order < 0 || !j.at("coeffs").is_array() || j.at("coeffs").size() != static_cast<std::size_t>(order) + 1)
    throw Error("series coeffs must have order+1 entries");
  return order;
}

}  // namespace

nlohmann::json to_json(const QSeries& s) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  return {{"var", "q"}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json to_json(const TQSeries& s) {
  auto coeffs = nlohmann::json::array();
  for (const auto& p : s.coeffs()) coeffs.push_back(poly_json(p));
  return {{"var", "q"}, {"coeff_var", "t"}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const nlohmann::json& j) {
  const int order = parse_header(j);
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_integer(c));
  return QSeries(order, std::move(coeffs));
}

TQSeries tqseries_from_json(const nlohmann::json& j) {
  const int order = parse_header(j);
  std::vector<TPoly> coeffs;
  for (const auto& p : j.at("coeffs")) {
    if (!p.is_array()) throw Error("t-polynomial must be an array of decimal text");
    std::vector<Integer> v;
    for (const auto& c : p) v.push_back(parse_integer(c));
    coeffs.emplace_back(std::move(v));
  }
  return TQSeries(order, std::move(coeffs));
}

}  // namespace theta_root
