#include <doctest.h>

#include <sstream>

#include "coinsys/harness.hpp"
#include "coinsys/serialize.hpp"

using namespace coinsys;

TEST_CASE("enumerate_systems counts and order") {
  const auto n3 = enumerate_systems(EnumerationSpec{3, 10, Filter::all});
  CHECK(n3.size() == 36);
  CHECK(std::is_sorted(n3.begin(), n3.end()));
  CHECK(n3.front() == CoinSystem({1, 2, 3}));
  CHECK(n3.back() == CoinSystem({1, 9, 10}));

  const auto n2 = enumerate_systems(EnumerationSpec{2, 3, Filter::all});
  REQUIRE(n2.size() == 2);
  CHECK(n2[0] == CoinSystem({1, 2}));
  CHECK(n2[1] == CoinSystem({1, 3}));

  const auto n4 = enumerate_systems(EnumerationSpec{4, 5, Filter::all});
  REQUIRE(n4.size() == 4);
  CHECK(n4[0] == CoinSystem({1, 2, 3, 4}));
  CHECK(n4[1] == CoinSystem({1, 2, 3, 5}));
  CHECK(n4[2] == CoinSystem({1, 2, 4, 5}));
  CHECK(n4[3] == CoinSystem({1, 3, 4, 5}));

  CHECK(enumerate_systems(EnumerationSpec{1, 1, Filter::all}).size() == 1);
  CHECK(enumerate_systems(EnumerationSpec{4, 4, Filter::all}).size() == 1);
}

TEST_CASE("enumeration filters") {
  for (const auto& s : enumerate_systems(EnumerationSpec{5, 12, Filter::family_only})) {
    CHECK(s[4] == 2 * s[3] - s[1]);
  }
  const auto canon = enumerate_systems(EnumerationSpec{3, 10, Filter::canonical_only});
  CHECK(!canon.empty());
  CHECK(canon.size() < 36);
  CHECK(std::find(canon.begin(), canon.end(), CoinSystem({1, 3, 4})) == canon.end());
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(SystemEnumerator(EnumerationSpec{0, 10, Filter::all}), CoinError);
  CHECK_THROWS_AS(SystemEnumerator(EnumerationSpec{5, 4, Filter::all}), CoinError);
  CHECK_THROWS_AS(cross_validate(EnumerationSpec{7, 10, Filter::all}, Comparison::closed_form), CoinError);
  CHECK_THROWS_AS(parse_filter("bogus"), CoinError);
  CHECK_THROWS_AS(parse_comparison("bogus"), CoinError);
}

TEST_CASE("cross_validate small sweeps") {
  auto closed = cross_validate(EnumerationSpec{3, 40, Filter::all}, Comparison::closed_form);
  CHECK(closed.total_systems == 741);  // C(39, 2)
  CHECK(closed.mismatches.empty());
  CHECK(closed.records.size() == closed.total_systems);

  auto pearson = cross_validate(EnumerationSpec{5, 20, Filter::all}, Comparison::pearson);
  CHECK(pearson.mismatches.empty());
  CHECK(pearson.total_systems == 3876);  // C(19, 4)
}

TEST_CASE("reports are deterministic and independent of the job count") {
  const EnumerationSpec spec{5, 18, Filter::all};
  const auto serial = cross_validate(spec, Comparison::closed_form, 1);
  const auto again = cross_validate(spec, Comparison::closed_form, 1);
  const auto parallel = cross_validate(spec, Comparison::closed_form, 4);
  CHECK(same_results(serial, again));
  CHECK(same_results(serial, parallel));
}

TEST_CASE("canonical counts grow with the bound") {
  const auto small = cross_validate(EnumerationSpec{4, 15, Filter::all}, Comparison::closed_form);
  const auto large = cross_validate(EnumerationSpec{4, 16, Filter::all}, Comparison::closed_form);
  std::size_t recount = 0;
  for (const auto& r : large.records) {
    if (r.canonical && r.system.largest() <= 15) ++recount;
  }
  CHECK(recount == small.canonical_count);
  CHECK(small.canonical_count <= large.canonical_count);
}

TEST_CASE("CSV output") {
  ValidationReport empty;
  std::ostringstream out;
  emit_report(empty, ReportFormat::csv, out);
  CHECK(out.str() == "system;canonical;min_counterexample;rule\n");

  CHECK(csv_row(SystemRecord{CoinSystem({1, 3, 4}), false, 6, "n3.ineq"}) == "\"1,3,4\";false;6;n3.ineq");
  CHECK(csv_row(SystemRecord{CoinSystem({1, 2, 4}), true, std::nullopt, "n3.r0"}) == "\"1,2,4\";true;;n3.r0");

  auto one = cross_validate(EnumerationSpec{3, 4, Filter::all}, Comparison::closed_form);
  std::ostringstream rows;
  emit_report(one, ReportFormat::csv, rows);
  CHECK(rows.str().find("\"1,3,4\";false;6;n3.ineq\n") != std::string::npos);
}

TEST_CASE("JSON report round-trips") {
  auto report = cross_validate(EnumerationSpec{4, 9, Filter::all}, Comparison::pearson);
  report.mismatches.push_back(Mismatch{CoinSystem({1, 3, 4}), true, std::nullopt, false, 6});
  std::ostringstream out;
  emit_report(report, ReportFormat::json, out);
  const auto parsed = report_from_json(nlohmann::json::parse(out.str()));
  CHECK(same_results(parsed, report));
  CHECK(parsed.elapsed_seconds == doctest::Approx(report.elapsed_seconds));
}

TEST_CASE("emit_report reports stream failures") {
  std::ostringstream out;
  out.setstate(std::ios::badbit);
  CHECK_THROWS_AS(emit_report(ValidationReport{}, ReportFormat::csv, out), CoinError);
}
