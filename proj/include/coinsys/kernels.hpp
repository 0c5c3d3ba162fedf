#pragma once
// Value-table kernels behind the brute-force canonicity oracle.
//
// Each kernel exists as a portable scalar reference and as SIMD variants
// (AVX2 on x86-64, NEON on aarch64). The active variant is picked once at
// runtime from CPU support and can be pinned with COINSYS_ISA=scalar|avx2|neon
// or set_active_isa(). All variants produce bit-identical output.
//
// Preconditions shared by every kernel: `coins` is a valid coin system
// (coins[0] == 1, strictly increasing) and tables hold fewer than
// kMaxTableSize entries, which keeps every count below 2^31.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "coinsys/coin_system.hpp"

namespace coinsys::kernels {

using Count = std::uint32_t;

inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 27;

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);
bool isa_supported(Isa isa);
Isa best_isa();
Isa active_isa();
/// Throws CoinError(DomainViolation) if the ISA is not supported here.
void set_active_isa(Isa isa);
std::vector<Isa> supported_isas();

// table[t] = opt(t) for t in [0, table.size()).
using OptimalCountsFn = void (*)(std::span<const Coin> coins, std::span<Count> table);
// table[t] = grd(t) for t in [0, table.size()).
using GreedyCountsFn = void (*)(std::span<const Coin> coins, std::span<Count> table);
// Smallest t in [from, to) with optimal[t] < greedy[t], or `to` if there is none.
using FirstImprovementFn = std::size_t (*)(std::span<const Count> optimal, std::span<const Count> greedy,
                                           std::size_t from, std::size_t to);

struct KernelSet {
  Isa isa;
  OptimalCountsFn optimal_counts;
  GreedyCountsFn greedy_counts;
  FirstImprovementFn first_improvement;
};

/// Kernel table for a specific ISA; throws if unsupported on this CPU/build.
const KernelSet& kernels_for(Isa isa);
const KernelSet& active_kernels();

inline void optimal_counts(std::span<const Coin> coins, std::span<Count> table) {
  active_kernels().optimal_counts(coins, table);
}
inline void greedy_counts(std::span<const Coin> coins, std::span<Count> table) {
  active_kernels().greedy_counts(coins, table);
}
inline std::size_t first_improvement(std::span<const Count> optimal, std::span<const Count> greedy,
                                     std::size_t from, std::size_t to) {
  return active_kernels().first_improvement(optimal, greedy, from, to);
}

namespace scalar {
void optimal_counts(std::span<const Coin> coins, std::span<Count> table);
void greedy_counts(std::span<const Coin> coins, std::span<Count> table);
std::size_t first_improvement(std::span<const Count> optimal, std::span<const Count> greedy, std::size_t from,
                              std::size_t to);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define COINSYS_HAVE_AVX2_KERNELS 1
namespace avx2 {
void optimal_counts(std::span<const Coin> coins, std::span<Count> table);
void greedy_counts(std::span<const Coin> coins, std::span<Count> table);
std::size_t first_improvement(std::span<const Count> optimal, std::span<const Count> greedy, std::size_t from,
                              std::size_t to);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define COINSYS_HAVE_NEON_KERNELS 1
namespace neon {
void optimal_counts(std::span<const Coin> coins, std::span<Count> table);
void greedy_counts(std::span<const Coin> coins, std::span<Count> table);
std::size_t first_improvement(std::span<const Count> optimal, std::span<const Count> greedy, std::size_t from,
                              std::size_t to);
}  // namespace neon
#endif

}  // namespace coinsys::kernels
