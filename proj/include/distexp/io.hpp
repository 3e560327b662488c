#pragma once

#include <nlohmann/json_fwd.hpp>
#include <iosfwd>
#include <vector>

#include "distexp/constants.hpp"
#include "distexp/empirical.hpp"
#include "distexp/identities.hpp"

namespace distexp {

inline constexpr int kSchemaVersion = 1;

/// Deterministic shortest-roundtrip formatting used in every CSV cell and
/// JSON number emitted here.
std::string format_double(double v);

nlohmann::json to_json(const ConstantEstimate& est);
nlohmann::json constants_json(const std::vector<ConstantEstimate>& estimates);

nlohmann::json to_json(const DistributionTable& table);
void write_distribution_csv(std::ostream& os, const DistributionTable& table);

nlohmann::json to_json(const ComparisonReport& report);
void write_comparison_csv(std::ostream& os, const ComparisonReport& report);

nlohmann::json to_json(const NestedGeometricReport& report);
nlohmann::json to_json(const SquarefreeLemmaReport& report);
nlohmann::json to_json(const LandauReport& report);

void write_json(std::ostream& os, const nlohmann::json& j);

}  // namespace distexp
