#pragma once

#include "qcount/asymptotics.hpp"

#include <json.hpp>

#include <string>

namespace qcount {

// schema: { form, a, regime, norm, constant: { value, ramified: [ {p,
// alpha_num, alpha_den} ] }, ladder: [ {T, count, predicted, ratio,
// elapsed_ms, breakdown} ], trend_ok }
nlohmann::json to_json(const VerifyReport& rep);

// product of the stored breakdown factors of rung `idx`; a written report
// must reproduce its own `predicted` this way
double predicted_from_breakdown(const nlohmann::json& report, size_t idx);

// RFC 4180: CRLF line endings, header row "T,count,predicted,ratio,elapsed_ms"
std::string to_csv(const VerifyReport& rep);

}  // namespace qcount
