// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "coinsys/kernels.hpp"

namespace coinsys::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 8;

std::size_t first_coin_at_least(std::span<const Coin> coins, Coin bound) {
  return static_cast<std::size_t>(std::lower_bound(coins.begin(), coins.end(), bound) - coins.begin());
}

}  // namespace

void optimal_counts(std::span<const Coin> coins, std::span<Count> table) {
  const std::size_t size = table.size();
  if (size == 0) return;
  Count* dp = table.data();
  dp[0] = 0;

  // Coins >= kLanes read only from earlier blocks, so a whole block can take
  // their minimum at once. Coins < kLanes (always including 1) read inside the
  // block and are folded in lane by lane afterwards.
  const std::size_t small_end = first_coin_at_least(coins, kLanes);
  const __m256i one = _mm256_set1_epi32(1);

  std::size_t t0 = 1;
  for (; t0 + kLanes <= size; t0 += kLanes) {
    __m256i best = _mm256_set1_epi32(-1);
    std::size_t k = small_end;
    for (; k < coins.size() && coins[k] <= t0; ++k) {
      auto prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dp + (t0 - coins[k])));
      best = _mm256_min_epu32(best, _mm256_add_epi32(prev, one));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dp + t0), best);

    // Coins in (t0, t0 + kLanes) only apply to the upper lanes.
    const std::size_t straddle_begin = k;
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      const std::size_t t = t0 + lane;
      Count cur = dp[t];
      for (std::size_t j = 0; j < small_end && coins[j] <= t; ++j) cur = std::min(cur, dp[t - coins[j]] + 1);
      for (std::size_t j = std::max(straddle_begin, small_end); j < coins.size() && coins[j] <= t; ++j) {
        cur = std::min(cur, dp[t - coins[j]] + 1);
      }
      dp[t] = cur;
    }
  }

  for (std::size_t t = t0; t < size; ++t) {
    Count best = std::numeric_limits<Count>::max();
    for (Coin c : coins) {
      if (c > t) break;
      best = std::min(best, dp[t - c] + 1);
    }
    dp[t] = best;
  }
}

void greedy_counts(std::span<const Coin> coins, std::span<Count> table) {
  const std::size_t size = table.size();
  if (size == 0) return;
  Count* g = table.data();
  g[0] = 0;
  const __m256i one = _mm256_set1_epi32(1);

  std::size_t k = 0;
  std::size_t t = 1;
  while (t + kLanes <= size) {
    while (k + 1 < coins.size() && coins[k + 1] <= t) ++k;
    const Coin c = coins[k];
    const bool same_segment = k + 1 == coins.size() || coins[k + 1] > t + kLanes - 1;
    if (same_segment && c >= kLanes) {
      auto prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g + (t - c)));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(g + t), _mm256_add_epi32(prev, one));
      t += kLanes;
      continue;
    }
    for (std::size_t end = t + kLanes; t < end; ++t) {
      while (k + 1 < coins.size() && coins[k + 1] <= t) ++k;
      g[t] = g[t - coins[k]] + 1;
    }
  }
  for (; t < size; ++t) {
    while (k + 1 < coins.size() && coins[k + 1] <= t) ++k;
    g[t] = g[t - coins[k]] + 1;
  }
}

std::size_t first_improvement(std::span<const Count> optimal, std::span<const Count> greedy, std::size_t from,
                              std::size_t to) {
  std::size_t t = from;
  for (; t + kLanes <= to; t += kLanes) {
    auto o = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(optimal.data() + t));
    auto g = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(greedy.data() + t));
    // Signed compare is exact: counts stay below 2^31.
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(g, o)));
    if (mask != 0) return t + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  for (; t < to; ++t) {
    if (optimal[t] < greedy[t]) return t;
  }
  return to;
}

}  // namespace coinsys::kernels::avx2
