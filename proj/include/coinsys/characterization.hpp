#pragma once
// Closed-form canonicity decisions for systems with up to six coins and for
// the c_n = 2c_{n-1} - c_2 family of any size.

#include <map>
#include <optional>
#include <string>

#include "coinsys/coin_system.hpp"

namespace coinsys {

/**
 Result of a closed-form decision.

 `rule` names the clause that settled the verdict:
   small                      n <= 2
   n3.r0 / n3.ineq            c_3 = q c_2 + r with r = 0, or the c_2 - q <= r test
   n4.prefix / n4.onepoint    3-coin prefix noncanonical, or the one-point test
   n5.a / n5.b                prefix canonical (one-point test), or the (1,2,c,c+1,2c) shape test
   n6.a                       5-coin prefix canonical (one-point test)
   n6.b                       5-coin prefix noncanonical and no admissible shape
   n6.b.i / n6.b.ii / n6.b.iii  shape matched; verdict from its side conditions
 `parameters` holds every intermediate quantity that was computed (q, r, m,
 grd_m, ell, grd_ell, formula_ell, ...).
 */
struct CharacterizationVerdict {
  bool canonical = true;
  std::string rule;
  std::map<std::string, Coin> parameters;
};

CharacterizationVerdict canonical3(const CoinSystem& system);
CharacterizationVerdict canonical4(const CoinSystem& system);
CharacterizationVerdict canonical5(const CoinSystem& system);
CharacterizationVerdict canonical6(const CoinSystem& system);

/// Dispatch on size; n > 6 throws UnsupportedSize.
CharacterizationVerdict characterize(const CoinSystem& system);

struct OnePoint {
  Coin m = 0;        // ceil(c_n / c_{n-1})
  Coin grd_m = 0;    // grd_C(m * c_{n-1})
  bool holds = false;  // grd_m <= m
};

/// The one-point inequality alone, with no check on the prefix.
OnePoint one_point_inequality(const CoinSystem& system);

/// Canonicity of C given a canonical (n-1)-prefix. The prefix is verified by
/// brute force; a noncanonical prefix throws PrerequisiteViolated.
bool one_point_test(const CoinSystem& system);

struct GrdEllForm {
  Coin ell = 0;            // ceil(c_5 / c_3)
  Coin formula_value = 0;  // ell c_3 - c_5 + 1 - floor((ell c_3 - c_5) / c_2) (c_2 - 1)
  Coin greedy_value = 0;   // grd_C(ell c_3)
  bool matches = false;
};

/// Six-coin systems only.
GrdEllForm grd_ell_closed_form(const CoinSystem& system);

/// True iff C = (1, 2, ..., n-3, c, c+1, 2c) with c > n-2. Requires n >= 5
/// (WrongSize) and c_n = 2c_{n-1} - c_2 (HypothesisViolated).
bool general_family_test(const CoinSystem& system);

/// The k in [2, n-2] with c_n = 2c_{n-1} - c_k, if any. Only k = 2 carries a
/// proven characterization (general_family_test); other k are reported as-is.
std::optional<std::size_t> family_candidate_index(const CoinSystem& system);

/// Builds (1, 2, ..., n-3, c, c+1, 2c).
CoinSystem family_system(std::size_t n, Coin c);

struct AppendixAForms {
  Coin c4 = 0;
  Coin ell = 0;
  Coin grd_ell = 0;
};

/// For C = (1, c2, 2c2-1, c4, c2+c4-1, 2c4-1) with c4 = 2c2 + s(2c2-1) + t:
/// ell = s+2 and grd(ell c_3) = c2 - t when t < c2, otherwise s+3 and c3 - t + 1.
/// Requires c2 >= 2 and t < 2c2 - 1 (DomainViolation).
AppendixAForms appendix_a_closed_forms(Coin c2, Coin s, Coin t);

/// The system the appendix forms describe.
CoinSystem appendix_a_system(Coin c2, Coin s, Coin t);

}  // namespace coinsys
