#pragma once

#include <json.hpp>

#include "core/ab_types.hpp"
#include "core/index_theory.hpp"
#include "core/morse.hpp"
#include "core/power_series.hpp"
#include "core/rational_function.hpp"

/* JSON (de)serialization with a canonical emitted form: objects carry their
 * keys in sorted order, coefficients are decimal strings (exact at any
 * width), and no floating-point value ever appears — so parse + re-dump of
 * any emitted document is byte-identical. */

namespace ymstrat {

/* {"coeffs": ["p/q", ...], "truncation": N} */
nlohmann::json to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

/* {"denominator": [{"form": "one_minus"|"one_plus", "k": int, "power": int},
 *  ...], "numerator": [int-or-decimal-string, ...], "sign": 1|-1}
 * Numerator entries are JSON integers when they fit in 64 bits and decimal
 * strings beyond that; the parser accepts either. */
nlohmann::json to_json(const RationalFunction& f);
RationalFunction rf_from_json(const nlohmann::json& j);

/* {"blocks": [[n, k], ...], "n0": int} — blocks are the nonzero-slope
 * blocks in slope order; n0 is the rank of the slope-zero block (0 when
 * absent). */
nlohmann::json to_json(const ABType& mu);
ABType type_from_json(const nlohmann::json& j);

/* {"lambda": int, "lambda_C": int, "lambda_R": int} */
nlohmann::json to_json(const CodimBreakdown& c);

/* {"scenario", "N", "morse_inequality": "holds|fails",
 *  "perfect_through_N", "antiperfect_through_N", "R_coeffs",
 *  "first_discrepancy": degree|null} */
nlohmann::json to_json(const VerifyReport& r);

/* The one canonical text form: two-space indent, sorted keys, trailing
 * newline. */
std::string dump_canonical(const nlohmann::json& j);

} // namespace ymstrat
