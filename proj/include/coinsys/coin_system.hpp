#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coinsys {

using Coin = std::uint64_t;

enum class ErrorKind {
  EmptyInput,
  MalformedInput,
  NotStartingAtOne,
  NotStrictlyIncreasing,
  NonPositiveValue,
  Overflow,
  IndexOutOfRange,
  WrongSize,
  UnsupportedSize,
  PrerequisiteViolated,
  HypothesisViolated,
  DomainViolation,
  ValueTooLarge,
  InvalidSpec,
  IoFailure,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map them to exit codes.
class CoinError : public std::runtime_error {
public:
  CoinError(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/**
 A denomination system (c_1, ..., c_n) with c_1 = 1 and strictly increasing
 values. Immutable once built. Construction rejects systems where 2 * c_n would
 not fit in 64 bits, so c_{n-1} + c_n and every candidate value derived from
 two coins is representable.

 Indices taken by the free functions in this library are 1-based to line up
 with the usual (c_1, ..., c_n) notation; operator[] is 0-based.
 */
class CoinSystem {
public:
  explicit CoinSystem(std::vector<Coin> denominations);

  std::size_t size() const noexcept { return coins_.size(); }
  Coin operator[](std::size_t i) const { return coins_[i]; }
  /// c_i for 1 <= i <= n; throws IndexOutOfRange otherwise.
  Coin coin(std::size_t i) const;
  Coin largest() const noexcept { return coins_.back(); }
  std::span<const Coin> denominations() const noexcept { return coins_; }

  auto operator<=>(const CoinSystem&) const = default;

private:
  std::vector<Coin> coins_;
};

/// Counts aligned index-for-index with a CoinSystem.
struct Representation {
  std::vector<Coin> counts;
  Coin value = 0;
  Coin total = 0;

  auto operator<=>(const Representation&) const = default;
};

/// Builds a Representation from counts, computing value and total.
Representation make_representation(const CoinSystem& system, std::vector<Coin> counts);

/// Parses "1,3,4". Whitespace around entries is ignored; order is not fixed up.
CoinSystem parse_system(std::string_view text);

/// "1,3,4"
std::string format_system(const CoinSystem& system);

/// "(2,0,1)"
std::string format_counts(std::span<const Coin> counts);

inline std::string format_representation(const Representation& rep) {
  return format_counts(rep.counts);
}

}  // namespace coinsys
