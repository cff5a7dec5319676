#pragma once

// Machine-readable records (one JSON object per line). Rationals are always
// serialized as "num/den" strings, big integers as decimal strings.

#include <json.hpp>

#include "avgorder/analysis.hpp"
#include "avgorder/census.hpp"

namespace avgorder {

nlohmann::json census_json(const OrderCensus& census);
nlohmann::json report_json(const AnalysisReport& report, const std::string& recipe);
nlohmann::json check_json(const CheckRecord& record);
nlohmann::json table_row_json(std::uint64_t n, const MinAverageOrder& row);
nlohmann::json limit_term_json(std::uint64_t n, const LimitTerm& term);
nlohmann::json density_hit_json(const DensityScan& scan, const DensityHit& hit);
nlohmann::json integer_hit_json(const IntegerHit& hit);

}  // namespace avgorder
