#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coinsys/coin_system.hpp"

namespace coinsys {

enum class Method { brute_force, pearson, closed_form };

std::string_view to_string(Method method);

struct CanonicityVerdict {
  bool canonical = true;
  std::optional<Coin> min_counterexample;
  Method method = Method::brute_force;
  /// (grd, opt) at the counterexample.
  std::optional<std::pair<Coin, Coin>> witness;
};

/// i-th symbol is '+' when the prefix (c_1, ..., c_i) is canonical.
struct PlusMinusClass {
  std::string symbols;

  bool operator==(const PlusMinusClass&) const = default;
};

/// (c_1, ..., c_k) for 1 <= k <= n.
CoinSystem subsystem(const CoinSystem& system, std::size_t k);

/// Smallest counterexample, searched in the window c_3 + 1 < w < c_{n-1} + c_n
/// that provably contains it. Absent for canonical systems and n <= 2.
std::optional<Coin> min_counterexample(const CoinSystem& system);

CanonicityVerdict is_canonical_bruteforce(const CoinSystem& system);

/// A candidate for the minimum counterexample built from the greedy
/// representation of c_{j+1} - 1 (1 <= i <= j < n, 1-based).
struct PearsonCandidate {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<Coin> counts;
  Coin value = 0;
  Coin total = 0;
};

/// All candidates, one per pair (i, j), in pair order.
std::vector<PearsonCandidate> pearson_candidate_list(const CoinSystem& system);

/// Distinct candidate values in increasing order. Empty for n < 3.
std::vector<Coin> pearson_candidates(const CoinSystem& system);

/// O(n^3) decision: a candidate w is a counterexample when its own coin total
/// beats grd(w); the smallest such w is the minimum counterexample.
CanonicityVerdict is_canonical_pearson(const CoinSystem& system);

/// No counterexample below c_n.
bool is_tight(const CoinSystem& system);

PlusMinusClass plus_minus_class(const CoinSystem& system);

/// Same class with each prefix decided by the given method (brute_force or
/// pearson); pearson scales to systems whose brute-force window is too large.
PlusMinusClass plus_minus_class(const CoinSystem& system, Method method);

}  // namespace coinsys
