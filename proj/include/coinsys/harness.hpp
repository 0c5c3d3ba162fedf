#pragma once
// Exhaustive enumeration of coin systems and cross-validation of the
// closed-form and Pearson deciders against the brute-force oracle.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coinsys/coin_system.hpp"

namespace coinsys {

enum class Filter { all, canonical_only, family_only };
enum class Comparison { closed_form, pearson };
enum class ReportFormat { json, csv };

std::string_view to_string(Filter filter);
std::string_view to_string(Comparison comparison);
Filter parse_filter(std::string_view text);
Comparison parse_comparison(std::string_view text);

struct EnumerationSpec {
  std::size_t n = 3;
  Coin max_denomination = 40;
  Filter filter = Filter::all;

  bool operator==(const EnumerationSpec&) const = default;
};

/// Throws InvalidSpec unless n >= 1 and max_denomination >= n.
void validate_spec(const EnumerationSpec& spec);

/// Every (1, c_2, ..., c_n) with c_n <= B in lexicographic order, filtered.
class SystemEnumerator {
public:
  explicit SystemEnumerator(EnumerationSpec spec);
  std::optional<CoinSystem> next();

private:
  bool advance();
  bool accepted() const;

  EnumerationSpec spec_;
  std::vector<Coin> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<CoinSystem> enumerate_systems(const EnumerationSpec& spec);

struct SystemRecord {
  CoinSystem system;
  bool canonical = true;  // oracle verdict
  std::optional<Coin> min_counterexample;
  std::string rule;

  bool operator==(const SystemRecord&) const = default;
};

struct Mismatch {
  CoinSystem system;
  bool candidate_canonical = true;
  std::optional<Coin> candidate_counterexample;
  bool oracle_canonical = true;
  std::optional<Coin> oracle_counterexample;

  bool operator==(const Mismatch&) const = default;
};

struct ValidationReport {
  EnumerationSpec spec;
  Comparison comparison = Comparison::closed_form;
  std::size_t total_systems = 0;
  std::size_t canonical_count = 0;
  std::vector<Mismatch> mismatches;
  std::vector<SystemRecord> records;
  double elapsed_seconds = 0.0;
};

/// Equality on everything except elapsed time.
bool same_results(const ValidationReport& a, const ValidationReport& b);

/// Requires spec.n <= 6 for the closed-form comparison. Work is split across
/// `jobs` threads by system index; the merged report does not depend on jobs.
ValidationReport cross_validate(const EnumerationSpec& spec, Comparison comparison, std::size_t jobs = 1);

/// Writes the report; throws IoFailure if the stream goes bad.
void emit_report(const ValidationReport& report, ReportFormat format, std::ostream& out);

}  // namespace coinsys
