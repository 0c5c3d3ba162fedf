#pragma once
// JSON and CSV encodings for verdicts and validation reports.

#include <optional>
#include <string>

#include <json.hpp>

#include "coinsys/canonicity.hpp"
#include "coinsys/characterization.hpp"
#include "coinsys/harness.hpp"

namespace coinsys {

/// {"system":[...],"canonical":bool,"min_counterexample":int|null,"method":"...","pm_class":"..."}
nlohmann::json verdict_json(const CoinSystem& system, const CanonicityVerdict& verdict,
                            const std::optional<PlusMinusClass>& pm);

/// Verdict object with method "closed_form" plus "rule" and "parameters".
/// Closed forms do not produce a counterexample, so min_counterexample is null.
nlohmann::json characterization_json(const CoinSystem& system, const CharacterizationVerdict& verdict,
                                     const std::optional<PlusMinusClass>& pm);

nlohmann::json report_json(const ValidationReport& report);
ValidationReport report_from_json(const nlohmann::json& j);

std::string csv_header();
/// "1,3,4";false;6;n3.ineq
std::string csv_row(const SystemRecord& record);

}  // namespace coinsys
