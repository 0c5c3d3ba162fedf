#include "coinsys/canonicity.hpp"

#include <algorithm>
#include <map>

#include "coinsys/core.hpp"
#include "coinsys/kernels.hpp"

namespace coinsys {

namespace {

using kernels::Count;

struct ValueTables {
  std::vector<Count> optimal;
  std::vector<Count> greedy;
};

ValueTables build_tables(const CoinSystem& system, Coin size) {
  if (size > kernels::kMaxTableSize) {
    throw CoinError(ErrorKind::ValueTooLarge,
                    "brute-force window of " + std::to_string(size) + " values exceeds the table limit");
  }
  ValueTables t{std::vector<Count>(size), std::vector<Count>(size)};
  kernels::optimal_counts(system.denominations(), t.optimal);
  kernels::greedy_counts(system.denominations(), t.greedy);
  return t;
}

// First counterexample in [from, to), or nullopt.
std::optional<Coin> scan(const CoinSystem& system, Coin from, Coin to) {
  if (from >= to) return std::nullopt;
  auto tables = build_tables(system, to);
  auto hit = kernels::first_improvement(tables.optimal, tables.greedy, from, to);
  if (hit == to) return std::nullopt;
  return static_cast<Coin>(hit);
}

CanonicityVerdict make_verdict(const CoinSystem& system, std::optional<Coin> w, Method method,
                               std::optional<Coin> opt_at_w = std::nullopt) {
  CanonicityVerdict v;
  v.method = method;
  v.canonical = !w.has_value();
  v.min_counterexample = w;
  if (w) {
    const Coin opt = opt_at_w ? *opt_at_w : optimal_count(system, *w);
    v.witness = std::make_pair(greedy_total(system, *w), opt);
  }
  return v;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::brute_force: return "brute_force";
    case Method::pearson: return "pearson";
    case Method::closed_form: return "closed_form";
  }
  return "unknown";
}

CoinSystem subsystem(const CoinSystem& system, std::size_t k) {
  if (k < 1 || k > system.size()) {
    throw CoinError(ErrorKind::IndexOutOfRange,
                    "prefix length " + std::to_string(k) + " outside 1.." + std::to_string(system.size()));
  }
  auto d = system.denominations();
  return CoinSystem(std::vector<Coin>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::optional<Coin> min_counterexample(const CoinSystem& system) {
  const std::size_t n = system.size();
  if (n <= 2) return std::nullopt;
  const Coin from = system[2] + 2;
  const Coin to = system[n - 2] + system[n - 1];
  return scan(system, from, to);
}

CanonicityVerdict is_canonical_bruteforce(const CoinSystem& system) {
  return make_verdict(system, min_counterexample(system), Method::brute_force);
}

std::vector<PearsonCandidate> pearson_candidate_list(const CoinSystem& system) {
  const std::size_t n = system.size();
  std::vector<PearsonCandidate> out;
  if (n < 3) return out;
  for (std::size_t j = 1; j < n; ++j) {
    const auto g = greedy_representation(system, system.coin(j + 1) - 1).counts;
    for (std::size_t i = 1; i <= j; ++i) {
      PearsonCandidate cand;
      cand.i = i;
      cand.j = j;
      cand.counts.assign(n, 0);
      cand.counts[i - 1] = g[i - 1] + 1;
      for (std::size_t k = i + 1; k <= j; ++k) cand.counts[k - 1] = g[k - 1];
      for (std::size_t k = 0; k < n; ++k) {
        cand.value += cand.counts[k] * system[k];
        cand.total += cand.counts[k];
      }
      out.push_back(std::move(cand));
    }
  }
  return out;
}

std::vector<Coin> pearson_candidates(const CoinSystem& system) {
  std::vector<Coin> values;
  for (const auto& c : pearson_candidate_list(system)) values.push_back(c.value);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

CanonicityVerdict is_canonical_pearson(const CoinSystem& system) {
  // Fewest coins seen per candidate value; that is an upper bound on opt(value).
  std::map<Coin, Coin> best_total;
  for (const auto& c : pearson_candidate_list(system)) {
    auto [it, inserted] = best_total.emplace(c.value, c.total);
    if (!inserted) it->second = std::min(it->second, c.total);
  }
  for (const auto& [value, total] : best_total) {
    if (total < greedy_total(system, value)) return make_verdict(system, value, Method::pearson, total);
  }
  return make_verdict(system, std::nullopt, Method::pearson);
}

bool is_tight(const CoinSystem& system) { return !scan(system, 1, system.largest()).has_value(); }

PlusMinusClass plus_minus_class(const CoinSystem& system) { return plus_minus_class(system, Method::brute_force); }

PlusMinusClass plus_minus_class(const CoinSystem& system, Method method) {
  if (method == Method::closed_form) {
    throw CoinError(ErrorKind::DomainViolation, "plus/minus class needs brute_force or pearson");
  }
  PlusMinusClass pm;
  pm.symbols.reserve(system.size());
  for (std::size_t k = 1; k <= system.size(); ++k) {
    const auto prefix = subsystem(system, k);
    const bool canonical =
        method == Method::pearson ? is_canonical_pearson(prefix).canonical : !min_counterexample(prefix).has_value();
    pm.symbols += canonical ? '+' : '-';
  }
  return pm;
}

}  // namespace coinsys
