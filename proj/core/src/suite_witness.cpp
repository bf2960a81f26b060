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

#include <chrono>
#include <map>
#include <sstream>

#include "lieorbit/verify.hpp"
#include "verify_internal.hpp"

namespace lieorbit {

namespace {

// Empty when the witness works at `values`, else what went wrong.
std::optional<std::string> witness_failure(const Catalog& catalog, const OrbitWitness& w,
                                           std::span<const Scalar> values) {
  SquareMatrix g(3, catalog.field());
  try {
    g = w.matrix.instantiate(values);
  } catch (const DivisionByZero&) {
    return "matrix entry has a zero denominator";
  }
  const Scalar det = g.det();
  if (det.is_zero()) return "matrix is singular";
  if (w.matrix.expected_det) {
    const Scalar expected = w.matrix.expected_det->evaluate(values);
    if (det != expected) return "det is " + det.to_string() + ", table says " + expected.to_string();
  }
  const StructureVector got = act(catalog.base_vector(w.base), g);
  const StructureVector expected = catalog.family_eval(w.family, values);
  if (got != expected) return "act(" + w.base + ", g) differs from " + w.family + ": " + detail::first_difference(got, expected);
  return std::nullopt;
}

void sampled_witness(VerificationReport& report, const SuiteConfig& cfg, const Catalog& catalog,
                     const OrbitWitness& w) {
  const std::string id = "witness." + w.id + ".rational";
  const ParamFamily& f = catalog.family(w.family);
  detail::ParamSampler sampler(detail::claim_seed(cfg.seed, id), cfg.sample_min, cfg.sample_max);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto values = sampler.sample(w.condition, f.arity(), cfg.rejection_limit);
    if (!values) {
      report.skip(id, w.anchor,
                  "no tuple satisfying " + w.condition.to_string() + " after " + std::to_string(cfg.rejection_limit) +
                      " draws");
      return;
    }
    if (auto why = witness_failure(catalog, w, *values)) {
      report.fail(id, w.anchor, detail::format_params(*f.params, *values) + "; " + *why);
      return;
    }
  }
  report.pass(id, w.anchor, std::to_string(cfg.trials) + " rational tuples satisfying " + w.condition.to_string());
}

void swept_witness(VerificationReport& report, const SuiteConfig& cfg, const Catalog& local, const OrbitWitness& w) {
  const std::uint32_t p = local.field().modulus();
  const std::string id = "witness." + w.id + ".sweep.F" + std::to_string(p);
  const ParamFamily& f = local.family(w.family);
  std::size_t matched = 0;
  std::optional<std::string> failure;
  detail::for_each_tuple(p, f.arity(), cfg.budget, [&](std::span<const Scalar> values) {
    if (failure || !w.condition.holds(values)) return;
    ++matched;
    if (auto why = witness_failure(local, w, values)) failure = detail::format_params(*f.params, values) + "; " + *why;
  });
  if (failure) {
    report.fail(id, w.anchor, *failure);
  } else if (matched == 0) {
    report.skip(id, w.anchor, "no tuple over F_" + std::to_string(p) + " satisfies " + w.condition.to_string());
  } else {
    report.pass(id, w.anchor, "all " + std::to_string(matched) + " tuples over F_" + std::to_string(p));
  }
}

std::optional<std::string> closure_failure(const Catalog& catalog, const TableRow& row, std::span<const Scalar> values) {
  const StructureVector v = catalog.family_eval(row.family, values);
  const PolySystem& sprime = catalog.system("Sprime");
  for (std::size_t g = 0; g < sprime.generators.size(); ++g) {
    const Scalar y = sprime.generators[g].evaluate(v.coords());
    if (!y.is_zero()) {
      return "S' generator " + sprime.generators[g].to_string() + " takes the value " + y.to_string();
    }
  }
  return std::nullopt;
}

void closure_row(VerificationReport& report, const SuiteConfig& cfg, const Catalog& catalog,
                 const std::vector<Catalog>& sweeps, const TableRow& row) {
  const std::string anchor = row.anchor + ": lies in the closure of O(eta)";
  {
    const std::string id = "closure." + row.id + ".rational";
    const ParamFamily& f = catalog.family(row.family);
    detail::ParamSampler sampler(detail::claim_seed(cfg.seed, id), cfg.sample_min, cfg.sample_max);
    std::optional<std::string> failure;
    bool skipped = false;
    for (std::size_t t = 0; t < cfg.trials && !failure && !skipped; ++t) {
      const auto values = sampler.sample(row.condition, f.arity(), cfg.rejection_limit);
      if (!values) {
        skipped = true;
      } else if (auto why = closure_failure(catalog, row, *values)) {
        failure = detail::format_params(*f.params, *values) + "; " + *why;
      }
    }
    if (failure) {
      report.fail(id, anchor, *failure);
    } else if (skipped) {
      report.skip(id, anchor, "rejection limit reached for " + row.condition.to_string());
    } else {
      report.pass(id, anchor, std::to_string(cfg.trials) + " rational tuples vanish on S'");
    }
  }
  for (const Catalog& local : sweeps) {
    const std::uint32_t p = local.field().modulus();
    const std::string id = "closure." + row.id + ".sweep.F" + std::to_string(p);
    const TableRow* lrow = nullptr;
    for (const auto& r : local.table_rows()) {
      if (r.id == row.id) lrow = &r;
    }
    const ParamFamily& f = local.family(row.family);
    std::size_t matched = 0;
    std::optional<std::string> failure;
    detail::for_each_tuple(p, f.arity(), cfg.budget, [&](std::span<const Scalar> values) {
      if (failure || !lrow->condition.holds(values)) return;
      ++matched;
      if (auto why = closure_failure(local, *lrow, values)) failure = detail::format_params(*f.params, values) + "; " + *why;
    });
    if (failure) {
      report.fail(id, anchor, *failure);
    } else {
      report.pass(id, anchor, "all " + std::to_string(matched) + " tuples over F_" + std::to_string(p) + " vanish on S'");
    }
  }
}

// Every parameter tuple of a rho_i family (alpha != 0 for rho1) is matched by
// at least one table row.
std::optional<std::string> uncovered(const Catalog& catalog, const std::string& family, std::span<const Scalar> values) {
  if (family == "rho1" && values[0].is_zero()) return std::nullopt;
  for (const auto& r : catalog.table_rows()) {
    if (r.family == family && r.condition.holds(values)) return std::nullopt;
  }
  return detail::format_params(*catalog.family(family).params, values) + " matches no row";
}

void coverage(VerificationReport& report, const SuiteConfig& cfg, const Catalog& catalog,
              const std::vector<Catalog>& sweeps, const std::string& family) {
  const std::string anchor = "g2+a1 transition table: the rows for " + family + " cover every parameter tuple";
  {
    const std::string id = "table." + family + ".coverage.rational";
    detail::ParamSampler sampler(detail::claim_seed(cfg.seed, id), cfg.sample_min, cfg.sample_max);
    const std::size_t arity = catalog.family(family).arity();
    std::optional<std::string> failure;
    for (std::size_t t = 0; t < cfg.trials && !failure; ++t) failure = uncovered(catalog, family, sampler.draw(arity));
    if (failure) {
      report.fail(id, anchor, *failure);
    } else {
      report.pass(id, anchor, std::to_string(cfg.trials) + " rational tuples");
    }
  }
  for (const Catalog& local : sweeps) {
    const std::uint32_t p = local.field().modulus();
    const std::string id = "table." + family + ".coverage.F" + std::to_string(p);
    std::optional<std::string> failure;
    detail::for_each_tuple(p, local.family(family).arity(), cfg.budget, [&](std::span<const Scalar> values) {
      if (!failure) failure = uncovered(local, family, values);
    });
    if (failure) {
      report.fail(id, anchor, *failure);
    } else {
      report.pass(id, anchor, "every tuple over F_" + std::to_string(p));
    }
  }
}

}  // namespace

VerificationReport check_orbit_witnesses(const SuiteConfig& cfg, const Catalog& catalog) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "witness";
  report.seed = cfg.seed;
  report.primes = cfg.primes;

  std::vector<Catalog> witness_fields;
  for (auto p : cfg.witness_sweep_primes) witness_fields.push_back(catalog.over(FieldDescriptor::prime(p)));
  std::vector<Catalog> closure_fields;
  for (auto p : cfg.closure_sweep_primes) closure_fields.push_back(catalog.over(FieldDescriptor::prime(p)));

  const auto witnesses = catalog.witnesses();
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    sampled_witness(report, cfg, catalog, witnesses[i]);
    for (const Catalog& local : witness_fields) swept_witness(report, cfg, local, local.witnesses()[i]);
  }

  std::size_t with_matrix = 0, closure = 0;
  for (const auto& row : catalog.table_rows()) {
    if (row.matrix) {
      ++with_matrix;
    } else {
      ++closure;
      closure_row(report, cfg, catalog, closure_fields, row);
    }
  }
  const std::string shape = std::to_string(catalog.table_rows().size()) + " rows, " + std::to_string(with_matrix) +
                            " with matrices, " + std::to_string(closure) + " closure rows";
  if (catalog.table_rows().size() == 16 && with_matrix == 13 && closure == 3) {
    report.pass("table.shape", "g2+a1 transition table", shape);
  } else {
    report.fail("table.shape", "g2+a1 transition table", shape + "; expected 16, 13 and 3");
  }
  for (const char* family : {"rho1", "rho2", "rho3"}) coverage(report, cfg, catalog, witness_fields, family);
  report.notes.push_back(
      "The rho1 rows 'A1 != 0, A2 = 0, gamma = 0' and 'A1 != 0, A2 = 0, beta = 0' overlap when beta = gamma = 0; "
      "both witnesses are checked on the overlap, so the rows cover the tuples but are not disjoint.");

  report.sort_claims();
  report.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lieorbit
