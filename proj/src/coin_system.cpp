#include "coinsys/coin_system.hpp"

#include <charconv>
#include <limits>

namespace coinsys {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotStartingAtOne: return "NotStartingAtOne";
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::NonPositiveValue: return "NonPositiveValue";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WrongSize: return "WrongSize";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::PrerequisiteViolated: return "PrerequisiteViolated";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::ValueTooLarge: return "ValueTooLarge";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

CoinError::CoinError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

CoinSystem::CoinSystem(std::vector<Coin> denominations) : coins_(std::move(denominations)) {
  if (coins_.empty()) throw CoinError(ErrorKind::EmptyInput, "coin system has no denominations");
  for (Coin c : coins_) {
    if (c == 0) throw CoinError(ErrorKind::NonPositiveValue, "denominations must be positive");
  }
  if (coins_.front() != 1) throw CoinError(ErrorKind::NotStartingAtOne, "c_1 must be 1");
  for (std::size_t i = 1; i < coins_.size(); ++i) {
    if (coins_[i] <= coins_[i - 1]) {
      throw CoinError(ErrorKind::NotStrictlyIncreasing,
                      "denominations must be strictly increasing at position " + std::to_string(i + 1));
    }
  }
  if (coins_.back() > std::numeric_limits<Coin>::max() / 2) {
    throw CoinError(ErrorKind::Overflow, "2 * c_n does not fit in 64 bits");
  }
}

Coin CoinSystem::coin(std::size_t i) const {
  if (i < 1 || i > coins_.size()) {
    throw CoinError(ErrorKind::IndexOutOfRange, "coin index " + std::to_string(i) + " outside 1.." +
                                                    std::to_string(coins_.size()));
  }
  return coins_[i - 1];
}

Representation make_representation(const CoinSystem& system, std::vector<Coin> counts) {
  if (counts.size() != system.size()) {
    throw CoinError(ErrorKind::WrongSize, "count vector length differs from system size");
  }
  Representation rep;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    rep.value += counts[i] * system[i];
    rep.total += counts[i];
  }
  rep.counts = std::move(counts);
  return rep;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

CoinSystem parse_system(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw CoinError(ErrorKind::EmptyInput, "empty coin system");

  std::vector<Coin> coins;
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    if (field.empty()) throw CoinError(ErrorKind::EmptyInput, "empty entry in coin system");
    if (field.front() == '-') {
      throw CoinError(ErrorKind::NonPositiveValue, "negative denomination '" + std::string(field) + "'");
    }
    Coin value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw CoinError(ErrorKind::Overflow, "denomination '" + std::string(field) + "' exceeds 64 bits");
    }
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw CoinError(ErrorKind::MalformedInput, "not a base-10 integer: '" + std::string(field) + "'");
    }
    coins.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return CoinSystem(std::move(coins));
}

std::string format_system(const CoinSystem& system) {
  std::string out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(system[i]);
  }
  return out;
}

std::string format_counts(std::span<const Coin> counts) {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  out += ')';
  return out;
}

}  // namespace coinsys
