#include "coinsys/serialize.hpp"

namespace coinsys {

using nlohmann::json;

namespace {

json system_json(const CoinSystem& system) {
  auto d = system.denominations();
  return json(std::vector<Coin>(d.begin(), d.end()));
}

CoinSystem system_from_json(const json& j) { return CoinSystem(j.get<std::vector<Coin>>()); }

json optional_json(const std::optional<Coin>& v) { return v ? json(*v) : json(nullptr); }

std::optional<Coin> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Coin>();
}

}  // namespace

json verdict_json(const CoinSystem& system, const CanonicityVerdict& verdict, const std::optional<PlusMinusClass>& pm) {
  json j;
  j["system"] = system_json(system);
  j["canonical"] = verdict.canonical;
  j["min_counterexample"] = optional_json(verdict.min_counterexample);
  j["method"] = std::string(to_string(verdict.method));
  if (pm) j["pm_class"] = pm->symbols;
  if (verdict.witness) j["witness"] = {{"grd", verdict.witness->first}, {"opt", verdict.witness->second}};
  return j;
}

json characterization_json(const CoinSystem& system, const CharacterizationVerdict& verdict,
                           const std::optional<PlusMinusClass>& pm) {
  json j;
  j["system"] = system_json(system);
  j["canonical"] = verdict.canonical;
  j["min_counterexample"] = nullptr;
  j["method"] = std::string(to_string(Method::closed_form));
  if (pm) j["pm_class"] = pm->symbols;
  j["rule"] = verdict.rule;
  j["parameters"] = json::object();
  for (const auto& [k, v] : verdict.parameters) j["parameters"][k] = v;
  return j;
}

json report_json(const ValidationReport& report) {
  json j;
  j["spec"] = {{"n", report.spec.n},
               {"max_denomination", report.spec.max_denomination},
               {"filter", std::string(to_string(report.spec.filter))}};
  j["compare"] = std::string(to_string(report.comparison));
  j["total_systems"] = report.total_systems;
  j["canonical_count"] = report.canonical_count;
  j["mismatches"] = json::array();
  for (const auto& m : report.mismatches) {
    j["mismatches"].push_back({{"system", system_json(m.system)},
                               {"candidate",
                                {{"canonical", m.candidate_canonical},
                                 {"min_counterexample", optional_json(m.candidate_counterexample)}}},
                               {"oracle",
                                {{"canonical", m.oracle_canonical},
                                 {"min_counterexample", optional_json(m.oracle_counterexample)}}}});
  }
  j["systems"] = json::array();
  for (const auto& r : report.records) {
    j["systems"].push_back({{"system", system_json(r.system)},
                            {"canonical", r.canonical},
                            {"min_counterexample", optional_json(r.min_counterexample)},
                            {"rule", r.rule}});
  }
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

ValidationReport report_from_json(const json& j) {
  ValidationReport r;
  const auto& spec = j.at("spec");
  r.spec.n = spec.at("n").get<std::size_t>();
  r.spec.max_denomination = spec.at("max_denomination").get<Coin>();
  r.spec.filter = parse_filter(spec.at("filter").get<std::string>());
  r.comparison = parse_comparison(j.at("compare").get<std::string>());
  r.total_systems = j.at("total_systems").get<std::size_t>();
  r.canonical_count = j.at("canonical_count").get<std::size_t>();
  for (const auto& m : j.at("mismatches")) {
    r.mismatches.push_back(Mismatch{system_from_json(m.at("system")), m.at("candidate").at("canonical").get<bool>(),
                                    optional_from_json(m.at("candidate").at("min_counterexample")),
                                    m.at("oracle").at("canonical").get<bool>(),
                                    optional_from_json(m.at("oracle").at("min_counterexample"))});
  }
  for (const auto& s : j.at("systems")) {
    r.records.push_back(SystemRecord{system_from_json(s.at("system")), s.at("canonical").get<bool>(),
                                     optional_from_json(s.at("min_counterexample")), s.at("rule").get<std::string>()});
  }
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  return r;
}

std::string csv_header() { return "system;canonical;min_counterexample;rule"; }

std::string csv_row(const SystemRecord& record) {
  std::string row = "\"" + format_system(record.system) + "\";";
  row += record.canonical ? "true" : "false";
  row += ';';
  if (record.min_counterexample) row += std::to_string(*record.min_counterexample);
  row += ';';
  row += record.rule;
  return row;
}

}  // namespace coinsys
