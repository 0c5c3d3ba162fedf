#include "coinsys/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <thread>

#include "coinsys/canonicity.hpp"
#include "coinsys/characterization.hpp"
#include "coinsys/serialize.hpp"

namespace coinsys {

std::string_view to_string(Filter filter) {
  switch (filter) {
    case Filter::all: return "all";
    case Filter::canonical_only: return "canonical_only";
    case Filter::family_only: return "family_only";
  }
  return "unknown";
}

std::string_view to_string(Comparison comparison) {
  switch (comparison) {
    case Comparison::closed_form: return "closed";
    case Comparison::pearson: return "pearson";
  }
  return "unknown";
}

Filter parse_filter(std::string_view text) {
  for (Filter f : {Filter::all, Filter::canonical_only, Filter::family_only}) {
    if (text == to_string(f)) return f;
  }
  throw CoinError(ErrorKind::InvalidSpec, "unknown filter '" + std::string(text) + "'");
}

Comparison parse_comparison(std::string_view text) {
  for (Comparison c : {Comparison::closed_form, Comparison::pearson}) {
    if (text == to_string(c)) return c;
  }
  throw CoinError(ErrorKind::InvalidSpec, "unknown comparison '" + std::string(text) + "'");
}

void validate_spec(const EnumerationSpec& spec) {
  if (spec.n < 1) throw CoinError(ErrorKind::InvalidSpec, "n must be at least 1");
  if (spec.max_denomination < spec.n) {
    throw CoinError(ErrorKind::InvalidSpec, "bound " + std::to_string(spec.max_denomination) +
                                                " admits no strictly increasing system of size " +
                                                std::to_string(spec.n));
  }
}

SystemEnumerator::SystemEnumerator(EnumerationSpec spec) : spec_(spec) {
  validate_spec(spec_);
  current_.resize(spec_.n);
  for (std::size_t i = 0; i < spec_.n; ++i) current_[i] = i + 1;
}

bool SystemEnumerator::advance() {
  const std::size_t n = current_.size();
  const Coin bound = spec_.max_denomination;
  // Position i (0-based) can go up to bound - (n - 1 - i) and still leave room.
  for (std::size_t i = n; i-- > 1;) {
    if (current_[i] < bound - (n - 1 - i)) {
      ++current_[i];
      for (std::size_t k = i + 1; k < n; ++k) current_[k] = current_[k - 1] + 1;
      return true;
    }
  }
  return false;
}

bool SystemEnumerator::accepted() const {
  switch (spec_.filter) {
    case Filter::all: return true;
    case Filter::canonical_only: return !min_counterexample(CoinSystem(current_)).has_value();
    case Filter::family_only: {
      const std::size_t n = current_.size();
      return n >= 3 && current_[n - 1] == 2 * current_[n - 2] - current_[1];
    }
  }
  return false;
}

std::optional<CoinSystem> SystemEnumerator::next() {
  while (!done_) {
    if (started_ && !advance()) {
      done_ = true;
      break;
    }
    started_ = true;
    if (accepted()) return CoinSystem(current_);
  }
  return std::nullopt;
}

std::vector<CoinSystem> enumerate_systems(const EnumerationSpec& spec) {
  std::vector<CoinSystem> out;
  SystemEnumerator e(spec);
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

bool same_results(const ValidationReport& a, const ValidationReport& b) {
  return a.spec == b.spec && a.comparison == b.comparison && a.total_systems == b.total_systems &&
         a.canonical_count == b.canonical_count && a.mismatches == b.mismatches && a.records == b.records;
}

namespace {

struct Evaluated {
  std::size_t index;
  SystemRecord record;
  std::optional<Mismatch> mismatch;
};

Evaluated evaluate(std::size_t index, const CoinSystem& system, Comparison comparison) {
  const auto oracle = is_canonical_bruteforce(system);
  Evaluated e{index, SystemRecord{system, oracle.canonical, oracle.min_counterexample, ""}, std::nullopt};

  bool cand_canonical = true;
  std::optional<Coin> cand_w;
  if (comparison == Comparison::closed_form) {
    const auto cf = characterize(system);
    cand_canonical = cf.canonical;
    e.record.rule = cf.rule;
  } else {
    const auto pv = is_canonical_pearson(system);
    cand_canonical = pv.canonical;
    cand_w = pv.min_counterexample;
    e.record.rule = "pearson";
  }

  const bool agree = cand_canonical == oracle.canonical &&
                     (comparison == Comparison::closed_form || cand_w == oracle.min_counterexample);
  if (!agree) {
    e.mismatch = Mismatch{system, cand_canonical, cand_w, oracle.canonical, oracle.min_counterexample};
  }
  return e;
}

}  // namespace

ValidationReport cross_validate(const EnumerationSpec& spec, Comparison comparison, std::size_t jobs) {
  validate_spec(spec);
  if (comparison == Comparison::closed_form && spec.n > 6) {
    throw CoinError(ErrorKind::InvalidSpec, "closed-form comparison needs n <= 6");
  }
  jobs = std::max<std::size_t>(jobs, 1);
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::vector<Evaluated>> partial(jobs);
  auto worker = [&](std::size_t w) {
    SystemEnumerator e(spec);
    std::size_t index = 0;
    while (auto s = e.next()) {
      if (index % jobs == w) partial[w].push_back(evaluate(index, *s, comparison));
      ++index;
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
  }

  std::vector<Evaluated> all;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), [](const Evaluated& a, const Evaluated& b) { return a.index < b.index; });

  ValidationReport report;
  report.spec = spec;
  report.comparison = comparison;
  report.total_systems = all.size();
  for (auto& e : all) {
    if (e.record.canonical) ++report.canonical_count;
    if (e.mismatch) report.mismatches.push_back(std::move(*e.mismatch));
    report.records.push_back(std::move(e.record));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void emit_report(const ValidationReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::json) {
    out << report_json(report).dump() << '\n';
  } else {
    out << csv_header() << '\n';
    for (const auto& r : report.records) out << csv_row(r) << '\n';
  }
  out.flush();
  if (!out) throw CoinError(ErrorKind::IoFailure, "failed writing report");
}

}  // namespace coinsys
