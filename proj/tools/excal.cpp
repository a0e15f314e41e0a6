// Command-line front end: census tables, identity verification, harmonic
// checks and the coordinate-harmonic conjecture scan. All output is
// byte-deterministic for a fixed invocation; randomized suites take an
// explicit seed. Exit codes: 0 success, 1 failure, 2 usage error,
// 3 conjecture counterexample found.

#include <CLI11.hpp>

#include "excal/census.hpp"
#include "excal/harmonic.hpp"
#include "excal/records.hpp"
#include "excal/suites.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("range", "empty range " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("range", "expected N or LO..HI, got " + text);
  }
}

int print_suites(const std::vector<excal::suites::SuiteResult>& results) {
  int failures = 0;
  for (const auto& r : results) {
    if (r.passed) {
      std::cout << "PASS " << r.name << " (" << r.cases << " cases)\n";
    } else {
      std::cout << "FAIL " << r.name << ": first failing witness " << r.first_failure << "\n";
      ++failures;
    }
  }
  return failures;
}

int run_census(const std::string& n_text, const std::string& k_text, const std::string& family,
               bool oracle, int oracle_max_n, int oracle_max_k, const std::string& format) {
  const Range n_range = parse_range(n_text);
  const Range k_range = parse_range(k_text);
  excal::census::CrossCheckOptions options;
  options.n_min = n_range.lo;
  options.n_max = n_range.hi;
  options.k_max = k_range.hi;
  options.with_oracle = oracle;
  options.oracle_max_n = oracle_max_n;
  options.oracle_max_k = oracle_max_k;

  auto reports = excal::census::cross_check(options);
  std::erase_if(reports, [&](const excal::census::CensusReport& r) {
    if (r.k < k_range.lo) return true;
    if (family == "A") return r.family != excal::Family::A;
    if (family == "B") return r.family != excal::Family::B;
    return false;
  });

  std::cout << (format == "records" ? excal::census_records(reports)
                                    : excal::census_table(reports));
  for (const auto& r : reports)
    if (!r.agree) return 1;
  return 0;
}

int run_verify(const std::string& n_text, std::uint64_t seed, int cases) {
  const Range n_range = parse_range(n_text);
  std::cout << "# excal verify n=" << n_text << " seed=" << seed << " cases=" << cases << "\n";
  int failures = 0;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    std::cout << "## n=" << n << "\n";
    failures += print_suites(excal::suites::forms_identity_suite(n, seed, cases));
    failures += print_suites(excal::suites::pair_table_suite(n));
    if (n == 3) failures += print_suites(excal::suites::classical_r3_suite(seed, cases));
  }
  return failures == 0 ? 0 : 1;
}

int run_harmonic(const std::string& n_text, std::uint64_t seed, int fields, int max_order) {
  const Range n_range = parse_range(n_text);
  std::cout << "# excal harmonic n=" << n_text << " seed=" << seed << " fields=" << fields
            << " max-order=" << max_order << "\n";
  int failures = 0;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    std::cout << "## n=" << n << "\n";
    failures += print_suites(excal::suites::harmonic_suite(n, seed, fields, max_order));
  }
  return failures == 0 ? 0 : 1;
}

int run_conjecture(int n, const std::string& k_text, int degree_max, const std::string& format) {
  const Range k_range = parse_range(k_text);
  const auto report = excal::harmonic::conjecture_scan(n, k_range.lo, k_range.hi, degree_max);
  std::cout << (format == "records" ? excal::conjecture_records(report)
                                    : excal::conjecture_table(report));
  return report.counterexample ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  // accept `--command census ...` as an alias for the subcommand form
  std::vector<std::string> raw(argv, argv + argc);
  if (raw.size() >= 3 && raw[1] == "--command") raw.erase(raw.begin() + 1);
  std::vector<char*> args;
  args.reserve(raw.size());
  for (auto& s : raw) args.push_back(s.data());

  CLI::App app{"exact exterior calculus on R^n and a census of the non-trivial "
               "compositions of its differential operations"};
  app.require_subcommand(1);

  std::string n_text = "3";
  std::string k_text = "1..10";
  std::string family = "both";
  std::string format = "table";
  bool oracle = false;
  int oracle_max_n = 5;
  int oracle_max_k = 4;
  std::uint64_t seed = 1729;
  int cases = 200;
  int fields = 100;
  int max_order = 5;
  int degree_max = 4;
  int scan_n = 3;

  auto* census = app.add_subcommand(
      "census", "count compositions by graph walks, closed forms, recurrences and the oracle");
  census->add_option("--n", n_text, "dimension or range, e.g. 3 or 2..6");
  census->add_option("--k", k_text, "composition order or range");
  census->add_option("--family", family, "A, B or both")
      ->check(CLI::IsMember({"A", "B", "both"}));
  census->add_flag("--oracle", oracle, "include the symbolic oracle count where feasible");
  census->add_option("--oracle-max-n", oracle_max_n, "oracle feasibility bound on n");
  census->add_option("--oracle-max-k", oracle_max_k, "oracle feasibility bound on k");
  census->add_option("--format", format, "table or records")
      ->check(CLI::IsMember({"table", "records"}));

  auto* verify = app.add_subcommand("verify", "run the exterior-calculus identity suites");
  verify->add_option("--n", n_text, "dimension or range");
  verify->add_option("--seed", seed, "seed for the randomized suites");
  verify->add_option("--cases", cases, "random cases per identity and degree");

  auto* harmonic =
      app.add_subcommand("harmonic", "run the harmonic equivalence and annihilation suites");
  harmonic->add_option("--n", n_text, "dimension or range");
  harmonic->add_option("--seed", seed, "seed for the randomized suites");
  harmonic->add_option("--fields", fields, "random fields per rank");
  harmonic->add_option("--max-order", max_order, "largest composition order");

  auto* conjecture = app.add_subcommand(
      "conjecture", "scan coordinate-harmonic inputs for higher-order counterexamples");
  conjecture->add_option("--n", scan_n, "dimension")->required();
  conjecture->add_option("--k", k_text, "order range, e.g. 3..5");
  conjecture->add_option("--deg", degree_max, "largest harmonic coefficient degree");
  conjecture->add_option("--format", format, "table or records")
      ->check(CLI::IsMember({"table", "records"}));

  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (census->parsed())
      return run_census(n_text, k_text, family, oracle, oracle_max_n, oracle_max_k, format);
    if (verify->parsed()) return run_verify(n_text, seed, cases);
    if (harmonic->parsed()) return run_harmonic(n_text, seed, fields, max_order);
    if (conjecture->parsed()) {
      if (k_text == "1..10") k_text = "3..5";  // subcommand default
      return run_conjecture(scan_n, k_text, degree_max, format);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
