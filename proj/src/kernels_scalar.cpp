#include <algorithm>
#include <limits>

#include "coinsys/kernels.hpp"

namespace coinsys::kernels::scalar {

void optimal_counts(std::span<const Coin> coins, std::span<Count> table) {
  if (table.empty()) return;
  table[0] = 0;
  for (std::size_t t = 1; t < table.size(); ++t) {
    Count best = std::numeric_limits<Count>::max();
    for (Coin c : coins) {
      if (c > t) break;
      best = std::min(best, table[t - c] + 1);
    }
    table[t] = best;
  }
}

void greedy_counts(std::span<const Coin> coins, std::span<Count> table) {
  if (table.empty()) return;
  table[0] = 0;
  // grd(t) = 1 + grd(t - c) where c is the largest coin not exceeding t.
  std::size_t k = 0;
  for (std::size_t t = 1; t < table.size(); ++t) {
    while (k + 1 < coins.size() && coins[k + 1] <= t) ++k;
    table[t] = table[t - coins[k]] + 1;
  }
}

std::size_t first_improvement(std::span<const Count> optimal, std::span<const Count> greedy, std::size_t from,
                              std::size_t to) {
  for (std::size_t t = from; t < to; ++t) {
    if (optimal[t] < greedy[t]) return t;
  }
  return to;
}

}  // namespace coinsys::kernels::scalar
