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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieorbit/catalog.hpp"
#include "lieorbit/structure.hpp"

namespace lieorbit {

struct SuiteConfig {
  std::vector<std::uint32_t> primes{2, 3};  // set-equality suite
  std::size_t trials = 1000;                 // rational samples per claim
  std::uint64_t seed = 42;
  std::int64_t sample_min = -20;
  std::int64_t sample_max = 20;
  std::uint64_t budget = kDefaultBudget;
  std::vector<std::uint32_t> witness_sweep_primes{3, 5};
  std::vector<std::uint32_t> closure_sweep_primes{3, 5};
  std::size_t action_samples = 500;
  std::size_t lie_invariance_samples = 100;
  std::size_t rejection_limit = 100000;  // consecutive rejections before "skipped"

  /// UsageError on a nonsensical configuration: no trials, empty sample
  /// range, composite primes, primes whose sweeps exceed the budget.
  void validate() const;
};

enum class Status { pass, fail, skipped };
const char* to_string(Status s) noexcept;

struct ClaimRecord {
  std::string id;
  std::string anchor;
  Status status = Status::pass;
  std::optional<std::string> counterexample;  // present iff status == fail
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimRecord> claims;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> primes;
  double duration_ms = 0;
  std::vector<std::string> notes;

  void pass(std::string id, std::string anchor, std::string detail = {});
  void fail(std::string id, std::string anchor, std::string counterexample, std::string detail = {});
  void skip(std::string id, std::string anchor, std::string detail);

  std::size_t count(Status s) const noexcept;
  bool ok() const noexcept { return count(Status::fail) == 0; }
  const ClaimRecord* find(const std::string& id) const noexcept;
  /// Appends other's claims and notes; claims end up sorted by id.
  void merge(const VerificationReport& other);
  void sort_claims();
};

/// F_p-points of a subset of the S1-and-S2-vanishing subspace of F^27, as
/// sorted, deduplicated base-p codes of their reduced coordinates.
class PointSet {
 public:
  PointSet(std::uint32_t p, std::string name);
  PointSet(std::uint32_t p, std::string name, std::vector<std::uint32_t> codes);

  std::uint32_t prime() const noexcept { return p_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::uint32_t>& codes() const noexcept { return codes_; }
  std::size_t size() const noexcept { return codes_.size(); }
  bool contains(const ReducedVector3& v) const;
  bool contains_code(std::uint32_t code) const;

  std::uint32_t encode(const ReducedVector3& v) const;
  ReducedVector3 decode(std::uint32_t code) const;
  std::vector<ReducedVector3> points() const;

  PointSet united(const PointSet& other, std::string name) const;
  PointSet intersected(const PointSet& other, std::string name) const;
  PointSet minus(const PointSet& other, std::string name) const;
  friend bool operator==(const PointSet& a, const PointSet& b) { return a.p_ == b.p_ && a.codes_ == b.codes_; }

 private:
  std::uint32_t p_;
  std::string name_;
  std::vector<std::uint32_t> codes_;
};

/// V(sys)(F_p) in reduced coordinates. The system must contain the S1 and
/// S2 generators (UsageError otherwise); BudgetExceeded when p^9 > budget.
PointSet enumerate_variety(const PolySystem& sys, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

/// Family identities among eta', eta_i, rho', rho_i checked on coefficients,
/// plus containments S in I(V), T in I(U).
VerificationReport check_cover_identities(const SuiteConfig& cfg, const Catalog& catalog);
/// Witness matrices g1, g2, g3 and the transition table, sampled over Q and
/// swept over small prime fields.
VerificationReport check_orbit_witnesses(const SuiteConfig& cfg, const Catalog& catalog);
/// act(eta, g) and act(rho, g) against the minor parametrizations.
VerificationReport check_minor_parametrization(const SuiteConfig& cfg, const Catalog& catalog);
VerificationReport check_action_axioms(const SuiteConfig& cfg, const Catalog& catalog);
/// Exact finite-field set equalities between varieties, orbits and family
/// images.
VerificationReport check_set_equalities(const SuiteConfig& cfg, const Catalog& catalog);
VerificationReport run_all(const SuiteConfig& cfg, const Catalog& catalog);

/// Suite names accepted by run_suite: all, cover, witness, minor, action, sets.
const std::vector<std::string>& suite_names();
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg, const Catalog& catalog);

}  // namespace lieorbit
