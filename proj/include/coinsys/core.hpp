#pragma once

#include <cstddef>

#include "coinsys/coin_system.hpp"

namespace coinsys {

/// Greedy representation: largest coin first, as many as fit.
Representation greedy_representation(const CoinSystem& system, Coin value);

/// grd_C(v), the number of coins the greedy algorithm uses. O(n), no tables.
Coin greedy_total(const CoinSystem& system, Coin value);

/// Count of coin i (1-based) in the greedy representation of value.
Coin greedy_coin_count(const CoinSystem& system, Coin value, std::size_t index);

/// opt_C(v) by dynamic programming over 0..v. Throws ValueTooLarge when the
/// table would exceed kernels::kMaxTableSize entries.
Coin optimal_count(const CoinSystem& system, Coin value);

/// Among all optimal representations of value, the lexicographically smallest
/// one in (x_1, ..., x_n) order: x_1 as small as possible, then x_2, and so on.
Representation lex_smallest_optimal(const CoinSystem& system, Coin value);

/// Count of coin i (1-based) in lex_smallest_optimal(system, value).
Coin lex_optimal_coin_count(const CoinSystem& system, Coin value, std::size_t index);

struct PaymentAnalysis {
  Coin value = 0;
  Representation greedy;
  Representation optimal;
  Coin grd = 0;
  Coin opt = 0;
  bool is_counterexample = false;
};

PaymentAnalysis analyze_payment(const CoinSystem& system, Coin value);

}  // namespace coinsys
