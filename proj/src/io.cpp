#include "distexp/io.hpp"

#include <nlohmann/json.hpp>
#include <cstdio>
#include <ostream>

namespace distexp {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

const char* kind_name(DistributionKind kind) {
  return kind == DistributionKind::FDistribution ? "f" : "g";
}

// Numbers are emitted as parsed-back doubles of their %.12g rendering so the
// byte output is stable across platforms and json serializer choices.
json num(double v) { return json::parse(format_double(v)); }

}  // namespace

json to_json(const ConstantEstimate& est) {
  return json{{"name", est.name},
              {"k_or_r", est.k_or_r},
              {"value", num(est.value)},
              {"lower", num(est.lower)},
              {"upper", num(est.upper)},
              {"cutoff", est.cutoff},
              {"rigorous", est.rigorous}};
}

json constants_json(const std::vector<ConstantEstimate>& estimates) {
  json records = json::array();
  for (const auto& est : estimates) records.push_back(to_json(est));
  return json{{"schema_version", kSchemaVersion}, {"records", records}};
}

json to_json(const DistributionTable& table) {
  json counts = json::object();
  for (std::size_t k = 0; k < table.counts.size(); ++k) {
    counts[std::to_string(k)] = table.counts[k];
  }
  return json{{"schema_version", kSchemaVersion},
              {"kind", kind_name(table.kind)},
              {"x", table.x},
              {"counts", counts}};
}

void write_distribution_csv(std::ostream& os, const DistributionTable& table) {
  os << "x,kind,k,count\n";
  for (std::size_t k = 0; k < table.counts.size(); ++k) {
    os << table.x << ',' << kind_name(table.kind) << ',' << k << ','
       << table.counts[k] << '\n';
  }
}

json to_json(const ComparisonReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r{{"x", row.x},
           {"k", report.k},
           {"count", row.count},
           {"prediction", num(row.prediction)},
           {"error", num(row.error)},
           {"ratio", num(row.ratio)}};
    if (report.kind == DistributionKind::GDistribution) {
      r["scaled_dev"] = num(row.scaled_dev);
    }
    rows.push_back(std::move(r));
  }
  json j{{"schema_version", kSchemaVersion},
         {"kind", kind_name(report.kind)},
         {"k", report.k},
         {"constant", to_json(report.constant)},
         {"rows", rows}};
  if (report.error_exponent.has_value()) {
    j["error_exponent"] = num(*report.error_exponent);
    j["exponent_threshold"] = num(report.exponent_threshold);
    j["exponent_consistent"] = report.exponent_consistent;
  }
  return j;
}

void write_comparison_csv(std::ostream& os, const ComparisonReport& report) {
  os << "x,k,count,prediction,error,ratio\n";
  for (const auto& row : report.rows) {
    os << row.x << ',' << report.k << ',' << row.count << ','
       << format_double(row.prediction) << ',' << format_double(row.error) << ','
       << format_double(row.ratio) << '\n';
  }
}

json to_json(const NestedGeometricReport& report) {
  json xs = json::array();
  for (double x : report.xs) xs.push_back(num(x));
  return json{{"a0", report.a0},
              {"xs", xs},
              {"truncation", report.truncation},
              {"lhs", num(report.lhs)},
              {"rhs", num(report.rhs)},
              {"difference", num(report.difference)},
              {"tail_bound", num(report.tail_bound)},
              {"pass", report.pass}};
}

json to_json(const SquarefreeLemmaReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back(json{{"x", row.x},
                        {"h", row.h},
                        {"q", row.q},
                        {"main_term", num(row.main_term)},
                        {"normalized_error", num(row.normalized_error)}});
  }
  return json{{"rows", rows},
              {"fitted_constant", num(report.fitted_constant)},
              {"threshold", num(report.threshold)},
              {"pass", report.pass}};
}

json to_json(const LandauReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back(json{{"x", row.x},
                        {"h", row.h},
                        {"s", row.s},
                        {"q_s", row.q_s},
                        {"main_term", num(row.main_term)},
                        {"ratio", num(row.ratio)},
                        {"scaled_dev", num(row.scaled_dev)}});
  }
  return json{{"rows", rows},
              {"fitted_constant", num(report.fitted_constant)},
              {"trend_ok", report.trend_ok},
              {"pass", report.pass}};
}

void write_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

}  // namespace distexp
