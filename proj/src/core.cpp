#include "coinsys/core.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "coinsys/kernels.hpp"

namespace coinsys {

namespace {

using kernels::Count;

constexpr Count kUnreachable = std::numeric_limits<Count>::max();

std::size_t table_size_for(Coin value) {
  if (value >= kernels::kMaxTableSize) {
    throw CoinError(ErrorKind::ValueTooLarge,
                    "value " + std::to_string(value) + " needs a DP table beyond " +
                        std::to_string(kernels::kMaxTableSize) + " entries");
  }
  return static_cast<std::size_t>(value) + 1;
}

void check_index(const CoinSystem& system, std::size_t index) {
  if (index < 1 || index > system.size()) {
    throw CoinError(ErrorKind::IndexOutOfRange,
                    "coin index " + std::to_string(index) + " outside 1.." + std::to_string(system.size()));
  }
}

}  // namespace

Representation greedy_representation(const CoinSystem& system, Coin value) {
  std::vector<Coin> counts(system.size(), 0);
  Coin remaining = value;
  for (std::size_t i = system.size(); i-- > 0;) {
    counts[i] = remaining / system[i];
    remaining -= counts[i] * system[i];
  }
  return make_representation(system, std::move(counts));
}

Coin greedy_total(const CoinSystem& system, Coin value) {
  Coin total = 0;
  for (std::size_t i = system.size(); i-- > 0;) {
    total += value / system[i];
    value %= system[i];
  }
  return total;
}

Coin greedy_coin_count(const CoinSystem& system, Coin value, std::size_t index) {
  check_index(system, index);
  return greedy_representation(system, value).counts[index - 1];
}

Coin optimal_count(const CoinSystem& system, Coin value) {
  std::vector<Count> table(table_size_for(value));
  kernels::optimal_counts(system.denominations(), table);
  return table.back();
}

Representation lex_smallest_optimal(const CoinSystem& system, Coin value) {
  const std::size_t n = system.size();
  const std::size_t size = table_size_for(value);

  // suffix[k][t]: fewest coins from {c_{k+1}, ..., c_n} (0-based k) summing to t.
  std::vector<std::vector<Count>> suffix(n, std::vector<Count>(size, kUnreachable));
  for (std::size_t t = 0; t < size; t += system[n - 1]) suffix[n - 1][t] = static_cast<Count>(t / system[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    const auto& next = suffix[k + 1];
    auto& cur = suffix[k];
    const Coin c = system[k];
    for (std::size_t t = 0; t < size; ++t) {
      Count best = next[t];
      if (t >= c && cur[t - c] != kUnreachable) best = std::min(best, cur[t - c] + 1);
      cur[t] = best;
    }
  }

  // Fix x_1 as small as possible while an optimal completion exists, then x_2, ...
  std::vector<Coin> counts(n, 0);
  std::size_t remaining = size - 1;
  Count budget = suffix[0][remaining];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Coin c = system[k];
    Coin x = 0;
    while (true) {
      const std::size_t rest = remaining - static_cast<std::size_t>(x * c);
      const Count tail = suffix[k + 1][rest];
      if (tail != kUnreachable && x + tail == budget) break;
      ++x;
    }
    counts[k] = x;
    remaining -= static_cast<std::size_t>(x * c);
    budget -= static_cast<Count>(x);
  }
  counts[n - 1] = remaining / system[n - 1];
  return make_representation(system, std::move(counts));
}

Coin lex_optimal_coin_count(const CoinSystem& system, Coin value, std::size_t index) {
  check_index(system, index);
  return lex_smallest_optimal(system, value).counts[index - 1];
}

PaymentAnalysis analyze_payment(const CoinSystem& system, Coin value) {
  PaymentAnalysis out;
  out.value = value;
  out.greedy = greedy_representation(system, value);
  out.optimal = lex_smallest_optimal(system, value);
  out.grd = out.greedy.total;
  out.opt = out.optimal.total;
  out.is_counterexample = out.opt < out.grd;
  return out;
}

}  // namespace coinsys
