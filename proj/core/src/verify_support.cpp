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

#include <algorithm>
#include <iterator>
#include <sstream>

#include "lieorbit/verify.hpp"
#include "verify_internal.hpp"

namespace lieorbit {

namespace {

std::uint64_t power_or_max(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

void SuiteConfig::validate() const {
  if (trials < 1) throw UsageError("trial count must be at least 1");
  if (sample_min > sample_max) throw UsageError("empty sampling range");
  if (sample_min == 0 && sample_max == 0) throw UsageError("sampling range must contain nonzero integers");
  if (primes.empty()) throw UsageError("need at least one prime");
  auto check_primes = [&](const std::vector<std::uint32_t>& ps, std::uint64_t exponent) {
    for (auto p : ps) {
      if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
      if (power_or_max(p, exponent) > budget) {
        throw BudgetExceeded("p = " + std::to_string(p) + " needs " + std::to_string(p) + "^" +
                             std::to_string(exponent) + " candidates, budget is " + std::to_string(budget));
      }
    }
  };
  check_primes(primes, 9);
  check_primes(witness_sweep_primes, 7);
  check_primes(closure_sweep_primes, 7);
}

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

void VerificationReport::pass(std::string id, std::string anchor, std::string detail) {
  claims.push_back({std::move(id), std::move(anchor), Status::pass, std::nullopt, std::move(detail)});
}

void VerificationReport::fail(std::string id, std::string anchor, std::string counterexample, std::string detail) {
  claims.push_back({std::move(id), std::move(anchor), Status::fail, std::move(counterexample), std::move(detail)});
}

void VerificationReport::skip(std::string id, std::string anchor, std::string detail) {
  claims.push_back({std::move(id), std::move(anchor), Status::skipped, std::nullopt, std::move(detail)});
}

std::size_t VerificationReport::count(Status s) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [s](const ClaimRecord& c) { return c.status == s; }));
}

const ClaimRecord* VerificationReport::find(const std::string& id) const noexcept {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void VerificationReport::merge(const VerificationReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  duration_ms += other.duration_ms;
  sort_claims();
}

void VerificationReport::sort_claims() {
  std::stable_sort(claims.begin(), claims.end(),
                   [](const ClaimRecord& a, const ClaimRecord& b) { return a.id < b.id; });
}

// ---------------------------------------------------------------------------

PointSet::PointSet(std::uint32_t p, std::string name) : p_(p), name_(std::move(name)) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (power_or_max(p, 9) > UINT32_MAX) throw UsageError("point codes need p^9 < 2^32");
}

PointSet::PointSet(std::uint32_t p, std::string name, std::vector<std::uint32_t> codes)
    : PointSet(p, std::move(name)) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  codes_ = std::move(codes);
}

std::uint32_t PointSet::encode(const ReducedVector3& v) const {
  if (v.field() != FieldDescriptor::prime(p_)) throw UsageError("point from another field");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < 9; ++i) code = code * p_ + v[i].residue();
  return code;
}

ReducedVector3 PointSet::decode(std::uint32_t code) const {
  const FieldDescriptor f = FieldDescriptor::prime(p_);
  std::array<Scalar, 9> values;
  for (std::size_t i = 9; i-- > 0;) {
    values[i] = Scalar::from_int(f, code % p_);
    code /= p_;
  }
  return ReducedVector3(values);
}

bool PointSet::contains_code(std::uint32_t code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

bool PointSet::contains(const ReducedVector3& v) const { return contains_code(encode(v)); }

std::vector<ReducedVector3> PointSet::points() const {
  std::vector<ReducedVector3> out;
  out.reserve(codes_.size());
  for (auto c : codes_) out.push_back(decode(c));
  return out;
}

PointSet PointSet::united(const PointSet& other, std::string name) const {
  if (other.p_ != p_) throw UsageError("point sets over different fields");
  std::vector<std::uint32_t> out;
  std::set_union(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end(), std::back_inserter(out));
  return PointSet(p_, std::move(name), std::move(out));
}

PointSet PointSet::intersected(const PointSet& other, std::string name) const {
  if (other.p_ != p_) throw UsageError("point sets over different fields");
  std::vector<std::uint32_t> out;
  std::set_intersection(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end(),
                        std::back_inserter(out));
  return PointSet(p_, std::move(name), std::move(out));
}

PointSet PointSet::minus(const PointSet& other, std::string name) const {
  if (other.p_ != p_) throw UsageError("point sets over different fields");
  std::vector<std::uint32_t> out;
  std::set_difference(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end(),
                      std::back_inserter(out));
  return PointSet(p_, std::move(name), std::move(out));
}

PointSet enumerate_variety(const PolySystem& sys, std::uint32_t p, std::uint64_t budget) {
  const FieldDescriptor field = FieldDescriptor::prime(p);
  if (sys.vars->size() != 27 || !(*sys.vars == *structure_vars(3))) {
    throw UsageError("enumerate_variety needs a system over the 27 X_ijk");
  }
  const PolySystem local = sys.over(field);
  // The reduced chart only covers systems that force X_iik = 0 and X_ijk = -X_jik.
  const PolySystem chart = jacobi_generators(3, field);
  for (std::size_t g = 0; g < 9 + 27; ++g) {
    const MultiPoly& required = chart.generators[g];
    const bool present = std::any_of(local.generators.begin(), local.generators.end(),
                                     [&](const MultiPoly& m) { return m == required; });
    if (!present) {
      throw UsageError("system " + sys.name + " lacks the antisymmetry generator " + required.to_string());
    }
  }
  if (power_or_max(p, 9) > budget) {
    throw BudgetExceeded(std::to_string(p) + "^9 points exceed the enumeration budget of " + std::to_string(budget));
  }
  std::vector<CompiledPoly> compiled;
  for (const auto& g : local.generators) {
    // Antisymmetry generators vanish on every lifted point.
    const bool implied = std::any_of(chart.generators.begin(), chart.generators.begin() + 36,
                                     [&](const MultiPoly& m) { return m == g; });
    if (!implied) compiled.emplace_back(g);
  }
  std::vector<std::uint32_t> digits(9, 0), lifted(27, 0);
  std::vector<std::uint32_t> codes;
  const std::uint64_t total = power_or_max(p, 9);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t t = 0; t < 9; ++t) {
      const auto& [i, j, k] = ReducedVector3::kTriples[t];
      const std::uint32_t v = digits[t];
      lifted[index_of(i, j, k, 3) - 1] = v;
      lifted[index_of(j, i, k, 3) - 1] = v == 0 ? 0 : p - v;
    }
    const bool on = std::all_of(compiled.begin(), compiled.end(),
                                [&](const CompiledPoly& c) { return c.vanishes_at(lifted); });
    if (on) codes.push_back(static_cast<std::uint32_t>(code));
    for (std::size_t d = 9; d-- > 0;) {
      if (++digits[d] < p) break;
      digits[d] = 0;
    }
  }
  return PointSet(p, "V(" + sys.name + ")", std::move(codes));
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "cover", "witness", "minor", "action", "sets"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg, const Catalog& catalog) {
  if (name == "all") return run_all(cfg, catalog);
  if (name == "cover") return check_cover_identities(cfg, catalog);
  if (name == "witness") return check_orbit_witnesses(cfg, catalog);
  if (name == "minor") return check_minor_parametrization(cfg, catalog);
  if (name == "action") return check_action_axioms(cfg, catalog);
  if (name == "sets") return check_set_equalities(cfg, catalog);
  throw UsageError("unknown suite '" + name + "'");
}

VerificationReport run_all(const SuiteConfig& cfg, const Catalog& catalog) {
  cfg.validate();
  VerificationReport all;
  all.suite = "all";
  all.seed = cfg.seed;
  all.primes = cfg.primes;
  all.merge(check_cover_identities(cfg, catalog));
  all.merge(check_orbit_witnesses(cfg, catalog));
  all.merge(check_minor_parametrization(cfg, catalog));
  all.merge(check_action_axioms(cfg, catalog));
  all.merge(check_set_equalities(cfg, catalog));
  return all;
}

// ---------------------------------------------------------------------------

namespace detail {

ParamSampler::ParamSampler(std::uint64_t seed, std::int64_t lo, std::int64_t hi) : rng_(seed), lo_(lo), hi_(hi) {}

Scalar ParamSampler::draw_scalar() {
  const FieldDescriptor q = FieldDescriptor::rationals();
  const int bucket = std::uniform_int_distribution<int>(0, 9)(rng_);
  if (bucket == 0 && lo_ <= 0 && hi_ >= 0) return Scalar::zero(q);
  if (bucket == 1 && lo_ <= 1 && hi_ >= 1) return Scalar::one(q);
  if (bucket == 2 && lo_ <= -1 && hi_ >= -1) return Scalar::from_int(q, -1);
  return Scalar::from_int(q, std::uniform_int_distribution<std::int64_t>(lo_, hi_)(rng_));
}

std::vector<Scalar> ParamSampler::draw(std::size_t arity) {
  std::vector<Scalar> v;
  v.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) v.push_back(draw_scalar());
  return v;
}

void ParamSampler::solve_equalities(const Predicate& pred, std::vector<Scalar>& values) {
  const std::size_t arity = values.size();
  std::vector<int> uses(arity, 0);
  for (const auto& a : pred.atoms) {
    if (a.nonzero) continue;
    for (std::size_t v = 0; v < arity; ++v) uses[v] += a.poly.degree_in(v) > 0;
  }
  std::vector<bool> solved(arity, false);
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& a : pred.atoms) {
      if (a.nonzero || a.poly.evaluate(values).is_zero()) continue;
      std::optional<std::size_t> pick;
      for (std::size_t v = 0; v < arity; ++v) {
        if (solved[v] || a.poly.degree_in(v) != 1) continue;
        if (!pick || uses[v] < uses[*pick]) pick = v;
      }
      if (!pick) continue;
      // a.poly = c*x + b with c, b free of x.
      std::vector<Scalar> at = values;
      at[*pick] = Scalar::zero(values[0].field());
      const Scalar b = a.poly.evaluate(at);
      at[*pick] = Scalar::one(values[0].field());
      const Scalar c = a.poly.evaluate(at) - b;
      if (c.is_zero()) continue;
      values[*pick] = -b / c;
      solved[*pick] = true;
    }
  }
}

std::optional<std::vector<Scalar>> ParamSampler::sample(const Predicate& pred, std::size_t arity, std::size_t limit) {
  for (std::size_t attempt = 0; attempt < limit; ++attempt) {
    std::vector<Scalar> values = draw(arity);
    if (std::uniform_int_distribution<int>(0, 3)(rng_) != 0) solve_equalities(pred, values);
    if (pred.holds(values)) return values;
  }
  return std::nullopt;
}

SquareMatrix ParamSampler::invertible_matrix(int n) {
  const FieldDescriptor q = FieldDescriptor::rationals();
  for (;;) {
    SquareMatrix g(n, q);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        g(i, j) = Scalar::from_int(q, std::uniform_int_distribution<std::int64_t>(lo_, hi_)(rng_));
      }
    }
    if (!g.det().is_zero()) return g;
  }
}

void for_each_tuple(std::uint32_t p, std::size_t arity, std::uint64_t budget,
                    const std::function<void(std::span<const Scalar>)>& visit) {
  const FieldDescriptor f = FieldDescriptor::prime(p);
  const std::uint64_t total = power_or_max(p, arity);
  if (total > budget) {
    throw BudgetExceeded(std::to_string(p) + "^" + std::to_string(arity) + " tuples exceed the budget");
  }
  std::vector<std::uint32_t> digits(arity, 0);
  std::vector<Scalar> values(arity, Scalar::zero(f));
  for (std::uint64_t n = 0; n < total; ++n) {
    for (std::size_t i = 0; i < arity; ++i) values[i] = Scalar::from_int(f, digits[i]);
    visit(values);
    for (std::size_t d = arity; d-- > 0;) {
      if (++digits[d] < p) break;
      digits[d] = 0;
    }
  }
}

std::string format_params(const VarTable& params, std::span<const Scalar> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << (i ? ", " : "") << params.name(i) << '=' << values[i];
  }
  return os.str();
}

std::string first_difference(const StructureVector& got, const StructureVector& expected) {
  for (std::size_t r = 1; r <= got.coords().size(); ++r) {
    if (got.coord(r) != expected.coord(r)) {
      const auto [i, j, k] = triple_of(r, got.dim());
      std::ostringstream os;
      os << 'X' << i << j << k << ": got " << got.coord(r) << ", expected " << expected.coord(r);
      return os.str();
    }
  }
  return "no difference";
}

std::string format_reduced(const ReducedVector3& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < 9; ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::uint64_t claim_seed(std::uint64_t seed, const std::string& claim_id) {
  // FNV-1a over the id, mixed with the seed.
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (unsigned char c : claim_id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail
}  // namespace lieorbit
