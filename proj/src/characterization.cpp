#include "coinsys/characterization.hpp"

#include "coinsys/canonicity.hpp"
#include "coinsys/core.hpp"

namespace coinsys {

namespace {

void require_size(const CoinSystem& system, std::size_t n) {
  if (system.size() != n) {
    throw CoinError(ErrorKind::WrongSize,
                    "expected " + std::to_string(n) + " coins, got " + std::to_string(system.size()));
  }
}

Coin ceil_div(Coin a, Coin b) { return a / b + (a % b != 0); }

CharacterizationVerdict prefix_verdict(const CoinSystem& system) {
  return characterize(subsystem(system, system.size() - 1));
}

// Applies the one-point inequality on top of a canonical prefix.
CharacterizationVerdict one_point_clause(const CoinSystem& system, std::string rule) {
  const auto op = one_point_inequality(system);
  CharacterizationVerdict v;
  v.rule = std::move(rule);
  v.canonical = op.holds;
  v.parameters["m"] = op.m;
  v.parameters["grd_m"] = op.grd_m;
  return v;
}

// (1, 2, c, c+1, 2c) with c > 3.
bool five_coin_shape(const CoinSystem& s) {
  return s[1] == 2 && s[3] == s[2] + 1 && s[4] == 2 * s[2] && s[2] > 3;
}

}  // namespace

CharacterizationVerdict canonical3(const CoinSystem& system) {
  require_size(system, 3);
  const Coin c2 = system[1];
  const Coin c3 = system[2];
  const Coin q = c3 / c2;
  const Coin r = c3 % c2;
  CharacterizationVerdict v;
  v.parameters["q"] = q;
  v.parameters["r"] = r;
  if (r == 0) {
    v.rule = "n3.r0";
    v.canonical = true;
  } else {
    // c_2 - q <= r, written without the subtraction since q may exceed c_2.
    v.rule = "n3.ineq";
    v.canonical = c2 <= q + r;
  }
  return v;
}

OnePoint one_point_inequality(const CoinSystem& system) {
  const std::size_t n = system.size();
  if (n < 2) throw CoinError(ErrorKind::WrongSize, "one-point test needs at least two coins");
  OnePoint op;
  op.m = ceil_div(system[n - 1], system[n - 2]);
  op.grd_m = greedy_total(system, op.m * system[n - 2]);
  op.holds = op.grd_m <= op.m;
  return op;
}

bool one_point_test(const CoinSystem& system) {
  if (system.size() < 2) throw CoinError(ErrorKind::WrongSize, "one-point test needs at least two coins");
  if (!is_canonical_bruteforce(subsystem(system, system.size() - 1)).canonical) {
    throw CoinError(ErrorKind::PrerequisiteViolated, "prefix " + format_system(subsystem(system, system.size() - 1)) +
                                                         " is not canonical");
  }
  return one_point_inequality(system).holds;
}

CharacterizationVerdict canonical4(const CoinSystem& system) {
  require_size(system, 4);
  if (!prefix_verdict(system).canonical) {
    return CharacterizationVerdict{false, "n4.prefix", {}};
  }
  return one_point_clause(system, "n4.onepoint");
}

CharacterizationVerdict canonical5(const CoinSystem& system) {
  require_size(system, 5);
  if (prefix_verdict(system).canonical) {
    auto v = one_point_clause(system, "n5.a");
    if (!v.canonical && five_coin_shape(system)) {
      v.canonical = true;
      v.rule = "n5.b";
    }
    return v;
  }
  CharacterizationVerdict v;
  v.rule = "n5.b";
  v.canonical = five_coin_shape(system);
  return v;
}

GrdEllForm grd_ell_closed_form(const CoinSystem& system) {
  require_size(system, 6);
  const Coin c2 = system[1];
  const Coin c3 = system[2];
  const Coin c5 = system[4];
  GrdEllForm f;
  f.ell = ceil_div(c5, c3);
  const Coin excess = f.ell * c3 - c5;
  f.formula_value = excess + 1 - (excess / c2) * (c2 - 1);
  f.greedy_value = greedy_total(system, f.ell * c3);
  f.matches = f.formula_value == f.greedy_value;
  return f;
}

CharacterizationVerdict canonical6(const CoinSystem& system) {
  require_size(system, 6);
  if (prefix_verdict(system).canonical) return one_point_clause(system, "n6.a");

  const Coin c2 = system[1], c3 = system[2], c4 = system[3], c5 = system[4], c6 = system[5];
  const auto form = grd_ell_closed_form(system);

  CharacterizationVerdict v;
  v.canonical = false;
  v.rule = "n6.b";
  v.parameters["ell"] = form.ell;
  v.parameters["grd_ell"] = form.greedy_value;
  v.parameters["formula_ell"] = form.formula_value;

  const bool ell_bound = form.greedy_value <= form.ell;
  if (c2 == 2 && c3 == 3 && c5 == c4 + 1 && c6 == 2 * c4) {
    v.rule = "n6.b.i";
    v.canonical = c4 > 4 && form.matches;
  } else if (c3 == 2 * c2 - 1 && c5 == c2 + c4 - 1 && c6 == 2 * c4 - 1) {
    v.rule = "n6.b.ii";
    v.canonical = c4 >= 3 * c2 - 1 && ell_bound && form.matches;
  } else if (c3 == 2 * c2 && c5 == c2 + c4 && c6 == 2 * c4) {
    v.rule = "n6.b.iii";
    v.canonical = c4 >= 3 * c2 - 1 && c4 != 3 * c2 && ell_bound && form.matches;
  }
  return v;
}

CharacterizationVerdict characterize(const CoinSystem& system) {
  switch (system.size()) {
    case 1:
    case 2: return CharacterizationVerdict{true, "small", {}};
    case 3: return canonical3(system);
    case 4: return canonical4(system);
    case 5: return canonical5(system);
    case 6: return canonical6(system);
    default:
      throw CoinError(ErrorKind::UnsupportedSize,
                      "closed-form characterization covers n <= 6, got n = " + std::to_string(system.size()));
  }
}

bool general_family_test(const CoinSystem& system) {
  const std::size_t n = system.size();
  if (n < 5) throw CoinError(ErrorKind::WrongSize, "family test needs n >= 5");
  if (system[n - 1] != 2 * system[n - 2] - system[1]) {
    throw CoinError(ErrorKind::HypothesisViolated, "c_n != 2 c_{n-1} - c_2 for " + format_system(system));
  }
  for (std::size_t i = 0; i + 3 < n; ++i) {
    if (system[i] != i + 1) return false;
  }
  const Coin c = system[n - 3];
  return system[n - 2] == c + 1 && system[n - 1] == 2 * c && c > n - 2;
}

std::optional<std::size_t> family_candidate_index(const CoinSystem& system) {
  const std::size_t n = system.size();
  if (n < 4) return std::nullopt;
  const Coin twice = 2 * system[n - 2];
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    if (twice - system[k - 1] == system[n - 1]) return k;
  }
  return std::nullopt;
}

CoinSystem family_system(std::size_t n, Coin c) {
  if (n < 5) throw CoinError(ErrorKind::WrongSize, "family systems have n >= 5");
  std::vector<Coin> coins;
  for (Coin i = 1; i + 3 <= n; ++i) coins.push_back(i);
  coins.push_back(c);
  coins.push_back(c + 1);
  coins.push_back(2 * c);
  return CoinSystem(std::move(coins));
}

AppendixAForms appendix_a_closed_forms(Coin c2, Coin s, Coin t) {
  if (c2 < 2) throw CoinError(ErrorKind::DomainViolation, "c2 must be at least 2");
  const Coin c3 = 2 * c2 - 1;
  if (t >= c3) throw CoinError(ErrorKind::DomainViolation, "t must lie in [0, 2 c2 - 1)");
  AppendixAForms out;
  out.c4 = 2 * c2 + s * c3 + t;
  if (t < c2) {
    out.ell = s + 2;
    out.grd_ell = c2 - t;
  } else {
    out.ell = s + 3;
    out.grd_ell = c3 - t + 1;
  }
  return out;
}

CoinSystem appendix_a_system(Coin c2, Coin s, Coin t) {
  const Coin c4 = appendix_a_closed_forms(c2, s, t).c4;
  return CoinSystem({1, c2, 2 * c2 - 1, c4, c2 + c4 - 1, 2 * c4 - 1});
}

}  // namespace coinsys
