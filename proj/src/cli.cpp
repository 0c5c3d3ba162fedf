#include "coinsys/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "coinsys/canonicity.hpp"
#include "coinsys/characterization.hpp"
#include "coinsys/core.hpp"
#include "coinsys/harness.hpp"
#include "coinsys/serialize.hpp"

namespace coinsys::cli {

namespace {

std::size_t default_jobs() {
  if (const char* env = std::getenv("COINSYS_JOBS")) {
    try {
      const long jobs = std::stol(env);
      if (jobs > 0) return static_cast<std::size_t>(jobs);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Options {
  std::string system;
  Coin value = 0;
  std::string method = "brute";
  std::size_t n = 0;
  Coin bound = 0;
  bool canonical_only = false;
  bool family_only = false;
  std::string compare = "closed";
  std::string format = "json";
  std::size_t jobs = 0;
};

int cmd_pay(const Options& o, std::ostream& out) {
  const auto system = parse_system(o.system);
  const auto a = analyze_payment(system, o.value);
  out << "greedy " << format_representation(a.greedy) << " total " << a.grd << '\n';
  out << "optimal " << format_representation(a.optimal) << " total " << a.opt << '\n';
  out << "counterexample " << (a.is_counterexample ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto system = parse_system(o.system);
  const bool pearson = o.method == "pearson";
  const auto verdict = pearson ? is_canonical_pearson(system) : is_canonical_bruteforce(system);
  const auto pm = plus_minus_class(system, pearson ? Method::pearson : Method::brute_force);
  out << verdict_json(system, verdict, pm).dump() << '\n';
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  out << plus_minus_class(parse_system(o.system)).symbols << '\n';
  return kExitOk;
}

int cmd_characterize(const Options& o, std::ostream& out) {
  const auto system = parse_system(o.system);
  const auto verdict = characterize(system);
  out << characterization_json(system, verdict, plus_minus_class(system)).dump() << '\n';
  return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  const auto system = parse_system(o.system);
  nlohmann::json j;
  j["system"] = std::vector<Coin>(system.denominations().begin(), system.denominations().end());
  j["family"] = general_family_test(system);
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  EnumerationSpec spec{o.n, o.bound, Filter::all};
  if (o.canonical_only) spec.filter = Filter::canonical_only;
  if (o.family_only) spec.filter = Filter::family_only;
  SystemEnumerator e(spec);
  while (auto s = e.next()) out << format_system(*s) << '\n';
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const EnumerationSpec spec{o.n, o.bound, Filter::all};
  const auto comparison = parse_comparison(o.compare);
  const auto format = o.format == "csv" ? ReportFormat::csv : ReportFormat::json;
  const std::size_t jobs = std::getenv("COINSYS_JOBS") ? default_jobs() : (o.jobs ? o.jobs : default_jobs());
  const auto report = cross_validate(spec, comparison, jobs);
  emit_report(report, format, out);
  return report.mismatches.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical coin system analysis"};
  app.require_subcommand(1);
  Options o;

  auto* pay = app.add_subcommand("pay", "Greedy and lexicographically smallest optimal representation of a value");
  pay->add_option("-c,--system", o.system, "Coin system, e.g. 1,3,4")->required();
  pay->add_option("-v,--value", o.value, "Value to pay")->required();

  auto* check = app.add_subcommand("check", "Decide canonicity and report the minimum counterexample");
  check->add_option("-c,--system", o.system, "Coin system")->required();
  check->add_option("--method", o.method, "Decision method")->check(CLI::IsMember({"brute", "pearson"}));

  auto* classify = app.add_subcommand("classify", "Print the +/- class");
  classify->add_option("-c,--system", o.system, "Coin system")->required();

  auto* charac = app.add_subcommand("characterize", "Closed-form decision for up to six coins");
  charac->add_option("-c,--system", o.system, "Coin system")->required();

  auto* family = app.add_subcommand("family", "Test the c_n = 2c_{n-1} - c_2 family shape");
  family->add_option("-c,--system", o.system, "Coin system")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every system of size N with c_n <= BOUND");
  enumerate->add_option("-n", o.n, "Number of coins")->required();
  enumerate->add_option("-B,--bound", o.bound, "Largest allowed denomination")->required();
  auto* canon_flag = enumerate->add_flag("--canonical-only", o.canonical_only, "Only canonical systems");
  enumerate->add_flag("--family-only", o.family_only, "Only systems with c_n = 2c_{n-1} - c_2")
      ->excludes(canon_flag);

  auto* validate = app.add_subcommand("validate", "Cross-validate a decider against the brute-force oracle");
  validate->add_option("-n", o.n, "Number of coins")->required();
  validate->add_option("-B,--bound", o.bound, "Largest allowed denomination")->required();
  validate->add_option("--compare", o.compare, "Decider to check")->check(CLI::IsMember({"closed", "pearson"}));
  validate->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  validate->add_option("-j,--jobs", o.jobs, "Worker threads (COINSYS_JOBS overrides)");

  std::vector<const char*> argv{"coinsys"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*pay) return cmd_pay(o, out);
    if (*check) return cmd_check(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*charac) return cmd_characterize(o, out);
    if (*family) return cmd_family(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*validate) return cmd_validate(o, out);
  } catch (const CoinError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::IoFailure ? kExitFailure : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace coinsys::cli
