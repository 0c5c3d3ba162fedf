#include <doctest.h>

#include <random>

#include "coinsys/core.hpp"
#include "oracle.hpp"

using namespace coinsys;

namespace {

std::vector<Coin> coins_of(const CoinSystem& c) { return {c.denominations().begin(), c.denominations().end()}; }

}  // namespace

TEST_CASE("parse_system accepts increasing lists starting at one") {
  CHECK(parse_system("1,3,4") == CoinSystem({1, 3, 4}));
  CHECK(parse_system(" 1, 2 ,5 ") == CoinSystem({1, 2, 5}));
  CHECK(parse_system("1") == CoinSystem({1}));
}

TEST_CASE("parse_system rejects malformed systems") {
  auto kind_of = [](const char* text) {
    try {
      parse_system(text);
    } catch (const CoinError& e) {
      return e.kind();
    }
    FAIL("expected a CoinError for " << text);
    return ErrorKind::IoFailure;
  };
  CHECK(kind_of("1,1,3") == ErrorKind::NotStrictlyIncreasing);
  CHECK(kind_of("1,4,3") == ErrorKind::NotStrictlyIncreasing);
  CHECK(kind_of("2,3,5") == ErrorKind::NotStartingAtOne);
  CHECK(kind_of("") == ErrorKind::EmptyInput);
  CHECK(kind_of("1,,3") == ErrorKind::EmptyInput);
  CHECK(kind_of("1,0") == ErrorKind::NonPositiveValue);
  CHECK(kind_of("1,-2") == ErrorKind::NonPositiveValue);
  CHECK(kind_of("1,x") == ErrorKind::MalformedInput);
  CHECK(kind_of("1,99999999999999999999999") == ErrorKind::Overflow);
  // 2 * c_n must fit.
  CHECK(kind_of("1,9223372036854775808") == ErrorKind::Overflow);
  CHECK_NOTHROW(parse_system("1,9223372036854775807"));
}

TEST_CASE("format helpers") {
  const auto c = parse_system("1,3,4");
  CHECK(format_system(c) == "1,3,4");
  CHECK(format_representation(greedy_representation(c, 6)) == "(2,0,1)");
}

TEST_CASE("greedy_representation") {
  const CoinSystem c134({1, 3, 4});
  auto g = greedy_representation(c134, 6);
  CHECK(g.counts == std::vector<Coin>{2, 0, 1});
  CHECK(g.total == 3);
  CHECK(g.value == 6);

  auto z = greedy_representation(c134, 0);
  CHECK(z.counts == std::vector<Coin>{0, 0, 0});
  CHECK(z.total == 0);

  auto g13 = greedy_representation(CoinSystem({1, 2, 5, 10}), 13);
  CHECK(g13.counts == std::vector<Coin>{1, 1, 0, 1});
  CHECK(g13.total == 3);
  CHECK(g13.counts == oracle::greedy_by_subtraction({1, 2, 5, 10}, 13));
}

TEST_CASE("greedy_coin_count") {
  const CoinSystem c({1, 3, 4});
  CHECK(greedy_coin_count(c, 6, 3) == 1);
  CHECK(greedy_coin_count(c, 6, 2) == 0);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(greedy_coin_count(c, 0, i) == 0);
  CHECK_THROWS_AS(greedy_coin_count(c, 6, 0), CoinError);
  CHECK_THROWS_AS(greedy_coin_count(c, 6, 4), CoinError);
}

TEST_CASE("optimal_count") {
  CHECK(optimal_count(CoinSystem({1, 3, 4}), 6) == 2);
  CHECK(optimal_count(CoinSystem({1, 3, 4}), 0) == 0);
  CHECK(optimal_count(CoinSystem({1, 4, 6, 8}), 12) == 2);
  CHECK(optimal_count(CoinSystem({1}), 17) == 17);
  CHECK_THROWS_AS(optimal_count(CoinSystem({1, 3}), Coin{1} << 40), CoinError);
}

TEST_CASE("lex_smallest_optimal") {
  auto r = lex_smallest_optimal(CoinSystem({1, 4, 6, 8}), 12);
  CHECK(r.counts == std::vector<Coin>{0, 0, 2, 0});
  CHECK(r.total == 2);
  CHECK(lex_smallest_optimal(CoinSystem({1, 3, 4}), 0).counts == std::vector<Coin>{0, 0, 0});

  auto r6 = lex_smallest_optimal(CoinSystem({1, 3, 4}), 6);
  CHECK(r6.counts == std::vector<Coin>{0, 2, 0});
  CHECK(r6.counts == oracle::lex_min_optimal({1, 3, 4}, 6));
}

TEST_CASE("lex_optimal_coin_count") {
  const CoinSystem c({1, 4, 6, 8});
  CHECK(lex_optimal_coin_count(c, 12, 3) == 2);
  CHECK(lex_optimal_coin_count(c, 12, 4) == 0);
  for (std::size_t i = 1; i <= 4; ++i) CHECK(lex_optimal_coin_count(c, 0, i) == 0);
  CHECK_THROWS_AS(lex_optimal_coin_count(c, 12, 5), CoinError);
}

TEST_CASE("analyze_payment") {
  auto a = analyze_payment(CoinSystem({1, 3, 4}), 6);
  CHECK(a.grd == 3);
  CHECK(a.opt == 2);
  CHECK(a.is_counterexample);

  auto b = analyze_payment(CoinSystem({1, 3, 4}), 5);
  CHECK(b.grd == 2);
  CHECK(b.opt == 2);
  CHECK_FALSE(b.is_counterexample);
  CHECK(b.opt == oracle::min_total({1, 3, 4}, 5));

  auto c = analyze_payment(CoinSystem({1, 2}), 7);
  CHECK(c.grd == 4);
  CHECK(c.opt == 4);
  CHECK_FALSE(c.is_counterexample);
  CHECK(c.opt == oracle::min_total({1, 2}, 7));
}

TEST_CASE("lex-min and DP agree with enumeration on small instances") {
  // Every system with c_n <= 12 and n <= 4, values up to 40; plus random
  // systems with c_n <= 20 and values up to 60.
  auto check_system = [](const std::vector<Coin>& coins, Coin max_value) {
    const CoinSystem system(coins);
    for (Coin v = 0; v <= max_value; ++v) {
      const auto expected = oracle::lex_min_optimal(coins, v);
      const auto got = lex_smallest_optimal(system, v);
      REQUIRE_MESSAGE(got.counts == expected, format_system(system) << " v=" << v);
      REQUIRE(got.value == v);
      REQUIRE(optimal_count(system, v) == oracle::total(expected));
    }
  };
  for (Coin a = 2; a <= 12; ++a) {
    check_system({1, a}, 40);
    for (Coin b = a + 1; b <= 12; ++b) {
      check_system({1, a, b}, 40);
      for (Coin c = b + 1; c <= 12; ++c) check_system({1, a, b, c}, 40);
    }
  }
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = 2 + static_cast<std::size_t>(rng() % 3);
    check_system(oracle::random_system(rng, n, 20), 60);
  }
}

TEST_CASE("representations conserve value and greedy is deterministic") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = 1 + static_cast<std::size_t>(rng() % 6);
    const auto coins = oracle::random_system(rng, n, 50);
    const CoinSystem system(coins);
    const Coin v = rng() % 201;
    const auto g = greedy_representation(system, v);
    const auto o = lex_smallest_optimal(system, v);
    Coin gv = 0, ov = 0;
    for (std::size_t i = 0; i < n; ++i) {
      gv += g.counts[i] * coins[i];
      ov += o.counts[i] * coins[i];
    }
    CHECK(gv == v);
    CHECK(ov == v);
    CHECK(o.total <= g.total);
    CHECK(greedy_representation(system, v) == g);
    CHECK(g.counts == oracle::greedy_by_subtraction(coins, v));
    CHECK(greedy_total(system, v) == g.total);
  }
}
