#include <atomic>
#include <cstdlib>
#include <string>

#include "coinsys/kernels.hpp"

namespace coinsys::kernels {

namespace {

constexpr KernelSet kScalar{Isa::scalar, &scalar::optimal_counts, &scalar::greedy_counts,
                            &scalar::first_improvement};
#if defined(COINSYS_HAVE_AVX2_KERNELS)
constexpr KernelSet kAvx2{Isa::avx2, &avx2::optimal_counts, &avx2::greedy_counts, &avx2::first_improvement};
#endif
#if defined(COINSYS_HAVE_NEON_KERNELS)
constexpr KernelSet kNeon{Isa::neon, &neon::optimal_counts, &neon::greedy_counts, &neon::first_improvement};
#endif

Isa isa_from_env() {
  const char* env = std::getenv("COINSYS_ISA");
  if (env == nullptr) return best_isa();
  const std::string name(env);
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (name == to_string(isa) && isa_supported(isa)) return isa;
  }
  return best_isa();
}

std::atomic<const KernelSet*>& active_slot() {
  static std::atomic<const KernelSet*> slot{&kernels_for(isa_from_env())};
  return slot;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(COINSYS_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(COINSYS_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

const KernelSet& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw CoinError(ErrorKind::DomainViolation, std::string("ISA not supported here: ") + std::string(to_string(isa)));
  }
  switch (isa) {
#if defined(COINSYS_HAVE_AVX2_KERNELS)
    case Isa::avx2: return kAvx2;
#endif
#if defined(COINSYS_HAVE_NEON_KERNELS)
    case Isa::neon: return kNeon;
#endif
    default: return kScalar;
  }
}

const KernelSet& active_kernels() { return *active_slot().load(std::memory_order_relaxed); }

Isa active_isa() { return active_kernels().isa; }

void set_active_isa(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_relaxed); }

}  // namespace coinsys::kernels
