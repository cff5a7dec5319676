#include "avgorder/report.hpp"

namespace avgorder {

using nlohmann::json;

json census_json(const OrderCensus& census) {
  json out = json::object();
  for (const auto& [d, n] : census.counts())
    out[std::to_string(d)] = n;
  return out;
}

json report_json(const AnalysisReport& report, const std::string& recipe) {
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"id", v.id},
                        {"quantity", v.quantity},
                        {"value", v.value.str()},
                        {"threshold", v.threshold.str()},
                        {"fires", v.fires},
                        {"conclusion", v.conclusion},
                        {"conclusion_holds", v.conclusion_holds ? json(*v.conclusion_holds)
                                                                : json(nullptr)},
                        {"consistent", v.consistent()}});
  }
  return {{"record", "group"},
          {"recipe", recipe},
          {"order", report.group_order},
          {"psi", to_string(report.psi)},
          {"o", report.avg_order.str()},
          {"psi_prime", report.psi_prime.str()},
          {"psi_double_prime", report.psi_double_prime.str()},
          {"census", census_json(report.census)},
          {"flags",
           {{"elementary_abelian_2", report.flags.elementary_abelian_2},
            {"cyclic", report.flags.cyclic},
            {"abelian", report.flags.abelian},
            {"nilpotent", report.flags.nilpotent},
            {"solvable", report.flags.solvable}}},
          {"verdicts", std::move(verdicts)}};
}

json check_json(const CheckRecord& record) {
  json witness = json::object();
  for (const auto& [k, v] : record.witness) {
    if (witness.contains(k)) {
      if (!witness[k].is_array())
        witness[k] = json::array({witness[k]});
      witness[k].push_back(v);
    } else {
      witness[k] = v;
    }
  }
  return {{"record", "check"},
          {"suite", record.suite},
          {"id", record.id},
          {"claim", record.claim},
          {"subject", record.subject},
          {"status", record.passed ? (record.vacuous ? "vacuous" : "pass") : "fail"},
          {"witness", std::move(witness)}};
}

json table_row_json(std::uint64_t n, const MinAverageOrder& row) {
  return {{"record", "min_average_order"},
          {"n", n},
          {"a_n", row.value.str()},
          {"attained_by", row.attained_by}};
}

json limit_term_json(std::uint64_t n, const LimitTerm& term) {
  return {{"record", "limit_term"},
          {"n", n},
          {"m", term.m},
          {"o", term.value.str()},
          {"gap", term.gap.str()}};
}

json density_hit_json(const DensityScan& scan, const DensityHit& hit) {
  return {{"record", "density_hit"},
          {"epsilon", scan.epsilon.str()},
          {"group", hit.label},
          {"order", hit.order},
          {"o", hit.avg_order.str()},
          {"n0", to_string(scan.n0)}};
}

json integer_hit_json(const IntegerHit& hit) {
  return {{"record", "integer_hit"},
          {"family", hit.family},
          {"recipe", to_string(hit.recipe)},
          {"order", hit.order},
          {"psi", to_string(hit.psi)},
          {"o", to_string(hit.avg_order)}};
}

}  // namespace avgorder
