#pragma once

// JSON form of series: {"var":"q","order":N,"coeffs":["1","1","2",...]}.
// Coefficients are decimal text. A TQSeries nests each t-polynomial as an
// array of decimal text, lowest degree first, and adds "coeff_var":"t".

#include "json.hpp"

#include "theta_root/series.hpp"

namespace theta_root {

nlohmann::json to_json(const QSeries& s);
nlohmann::json to_json(const TQSeries& s);

QSeries qseries_from_json(const nlohmann::json& j);
TQSeries tqseries_from_json(const nlohmann::json& j);

}  // namespace theta_root
