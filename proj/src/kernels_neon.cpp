// aarch64 only; NEON is part of the base ISA there so no runtime probe is needed.
#include "coinsys/kernels.hpp"

#if defined(COINSYS_HAVE_NEON_KERNELS)

#include <arm_neon.h>

#include <algorithm>
#include <limits>

namespace coinsys::kernels::neon {

namespace {

constexpr std::size_t kLanes = 4;

}  // namespace

void optimal_counts(std::span<const Coin> coins, std::span<Count> table) {
  const std::size_t size = table.size();
  if (size == 0) return;
  Count* dp = table.data();
  dp[0] = 0;

  const std::size_t small_end =
      static_cast<std::size_t>(std::lower_bound(coins.begin(), coins.end(), Coin{kLanes}) - coins.begin());
  const uint32x4_t one = vdupq_n_u32(1);

  std::size_t t0 = 1;
  for (; t0 + kLanes <= size; t0 += kLanes) {
    uint32x4_t best = vdupq_n_u32(std::numeric_limits<Count>::max());
    std::size_t k = small_end;
    for (; k < coins.size() && coins[k] <= t0; ++k) {
      best = vminq_u32(best, vaddq_u32(vld1q_u32(dp + (t0 - coins[k])), one));
    }
    vst1q_u32(dp + t0, best);

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
  const uint32x4_t one = vdupq_n_u32(1);

  std::size_t k = 0;
  std::size_t t = 1;
  while (t + kLanes <= size) {
    while (k + 1 < coins.size() && coins[k + 1] <= t) ++k;
    const Coin c = coins[k];
    const bool same_segment = k + 1 == coins.size() || coins[k + 1] > t + kLanes - 1;
    if (same_segment && c >= kLanes) {
      vst1q_u32(g + t, vaddq_u32(vld1q_u32(g + (t - c)), one));
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
    const uint32x4_t lt = vcltq_u32(vld1q_u32(optimal.data() + t), vld1q_u32(greedy.data() + t));
    if (vmaxvq_u32(lt) != 0) break;
  }
  for (; t < to; ++t) {
    if (optimal[t] < greedy[t]) return t;
  }
  return to;
}

}  // namespace coinsys::kernels::neon

#endif
