#pragma once

#include <string>

#include <json.hpp>

#include "pfc/modcheck.hpp"
#include "pfc/qseries.hpp"

namespace pfc {

using Json = nlohmann::ordered_json;

/// {"offset": "a/b", "denom": n, "order": "a/b", "terms": [["index", "coeff"], ...]}
Json series_to_json(const QSeries& s);
/// Inverse of series_to_json. ParseError on malformed input.
QSeries series_from_json(const Json& j);

/// Residuals and tails as decimal strings with `digits` significant digits.
Json report_to_json(const CheckReport& r, int digits = 6);

Json matrix_to_json(const RealMatrix& m, int digits);

}  // namespace pfc
