// Copyright 2026 The lieorbit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lieorbit/catalog.hpp"
#include "lieorbit/report.hpp"
#include "lieorbit/verify.hpp"

namespace lieorbit::cli {

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("LIEORBIT_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || value == 0) {
    throw UsageError(std::string("LIEORBIT_BUDGET must be a positive integer, got '") + raw + "'");
  }
  return value;
}

// Writes to --out when given, else to out.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw UsageError("failed writing " + path);
}

Catalog load_catalog(const RunOptions& options) {
  Catalog c = Catalog::standard();
  if (options.inject_fault) c.negate_s3_term(0, 0);
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options) {
  CLI::App app{"Exact verification of the orbit closures of h3 and g2+a1 in L_3(F)", "lieorbit"};
  app.require_subcommand(1);

  SuiteConfig defaults;
  std::string suite = "all";
  std::vector<std::uint32_t> primes = defaults.primes;
  std::size_t trials = defaults.trials;
  std::uint64_t seed = defaults.seed;
  std::string format = "text";
  std::string out_path;
  std::string system;
  std::string base;
  std::uint32_t prime = 2;

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_names()));
  verify->add_option("--primes", primes, "Primes for the set-equality suite")->delimiter(',');
  verify->add_option("--trials", trials, "Rational samples per claim")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "Write the report here instead of stdout");

  CLI::App* enumerate = app.add_subcommand("enumerate", "List the F_p-points of a polynomial system");
  enumerate->add_option("--system", system, "System name")->required()->check(CLI::IsMember(Catalog::system_names()));
  enumerate->add_option("--prime", prime, "Field characteristic")->required();
  enumerate->add_option("--out", out_path, "CSV output path");

  CLI::App* orbit_cmd = app.add_subcommand("orbit", "List the GL(3, F_p)-orbit of a base vector");
  orbit_cmd->add_option("--base", base, "eta, rho or zero")->required()->check(CLI::IsMember({"eta", "rho", "zero"}));
  orbit_cmd->add_option("--prime", prime, "Field characteristic")->required();
  orbit_cmd->add_option("--out", out_path, "CSV output path");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    const std::uint64_t budget = budget_from_env();
    const Catalog catalog = load_catalog(options);
    if (verify->parsed()) {
      SuiteConfig cfg;
      cfg.primes = primes;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.budget = budget;
      cfg.validate();
      VerificationReport report = run_suite(suite, cfg, catalog);
      report.suite = suite;
      emit(out_path, format == "json" ? to_json(report) : to_text(report), out);
      return report.ok() ? kPass : kCheckFailed;
    }
    const FieldDescriptor field = FieldDescriptor::prime(prime);
    std::ostringstream csv;
    if (enumerate->parsed()) {
      const PointSet points = enumerate_variety(catalog.system(system), prime, budget);
      write_reduced_csv(csv, points.points());
    } else {
      std::vector<ReducedVector3> points;
      for (const auto& v : orbit(catalog.over(field).base_vector(base), budget)) points.push_back(reduce3(v));
      write_reduced_csv(csv, points);
    }
    emit(out_path, csv.str(), out);
    return kPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise LIEORBIT_BUDGET to allow it)\n";
    return kUsage;
  }
}

}  // namespace lieorbit::cli
