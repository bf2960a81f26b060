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
#include <algorithm>
#include <map>
#include <random>

#include "lieorbit/verify.hpp"
#include "verify_internal.hpp"

namespace lieorbit {

namespace {

std::string matrix_text(const SquareMatrix& g) { return "g = " + g.to_string(); }

StructureVector eta_from_minors(const Catalog& catalog, const SquareMatrix& g) {
  const Scalar inv = g.det().inverse();
  const std::vector<Scalar> args{g.minor(1, 1), g.minor(1, 2), g.minor(1, 3), inv};
  return catalog.family_eval("eta_prime", args);
}

StructureVector rho_from_minors(const Catalog& catalog, const SquareMatrix& g) {
  const Scalar inv = g.det().inverse();
  const std::vector<Scalar> args{g.minor(1, 1), g.minor(1, 2), g.minor(1, 3), g.minor(3, 3),
                                 g.minor(3, 2), g.minor(3, 1), inv};
  return catalog.family_eval("rho_prime", args);
}

std::optional<std::string> minor_failure(const Catalog& catalog, const SquareMatrix& g) {
  const StructureVector eta = act(catalog.base_vector("eta"), g);
  const StructureVector eta_expected = eta_from_minors(catalog, g);
  if (eta != eta_expected) return matrix_text(g) + "; eta: " + detail::first_difference(eta, eta_expected);
  const StructureVector rho = act(catalog.base_vector("rho"), g);
  const StructureVector rho_expected = rho_from_minors(catalog, g);
  if (rho != rho_expected) return matrix_text(g) + "; rho: " + detail::first_difference(rho, rho_expected);
  return std::nullopt;
}

StructureVector random_instance(detail::ParamSampler& sampler, const Catalog& catalog) {
  const auto& families = catalog.families();
  const auto& f = families[std::uniform_int_distribution<std::size_t>(0, families.size() - 1)(sampler.engine())];
  return f.at(sampler.draw(f.arity()));
}

}  // namespace

VerificationReport check_minor_parametrization(const SuiteConfig& cfg, const Catalog& catalog) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "minor";
  report.seed = cfg.seed;
  report.primes = cfg.primes;
  const std::string anchor_eta = "Heisenberg orbit: eta.g = eta'(M11, M12, M13, 1/det g)";
  const std::string anchor_rho = "g2+a1 orbit: rho.g = rho'(M11, M12, M13, M33, M32, M31, 1/det g)";

  {
    const SquareMatrix id = SquareMatrix::identity(3, catalog.field());
    if (auto why = minor_failure(catalog, id)) {
      report.fail("minor.identity", anchor_eta, *why);
    } else {
      report.pass("minor.identity", anchor_eta, "minors of the identity give eta and rho back");
    }
  }
  {
    const auto g3 = catalog.witnesses()[2];
    const std::vector<Scalar> kappa{Scalar::one(catalog.field())};
    const SquareMatrix g = g3.matrix.instantiate(kappa);
    const StructureVector viaminors = eta_from_minors(catalog, g);
    const StructureVector target = catalog.family_eval("eta3", kappa);
    if (viaminors != target) {
      report.fail("minor.g3", anchor_eta, matrix_text(g) + "; " + detail::first_difference(viaminors, target));
    } else if (act(catalog.base_vector("eta"), g) != target) {
      report.fail("minor.g3", anchor_eta, matrix_text(g) + "; eta.g3(1) differs from eta3(1)");
    } else {
      report.pass("minor.g3", anchor_eta, "eta'(0,0,1,1) = eta3(1) = eta.g3(1)");
    }
  }
  for (const char* which : {"eta", "rho"}) {
    const std::string id = std::string("minor.") + which + ".rational";
    const std::string& anchor = which[0] == 'e' ? anchor_eta : anchor_rho;
    detail::ParamSampler sampler(detail::claim_seed(cfg.seed, id), cfg.sample_min, cfg.sample_max);
    std::optional<std::string> failure;
    for (std::size_t t = 0; t < cfg.trials && !failure; ++t) {
      const SquareMatrix g = sampler.invertible_matrix(3);
      const StructureVector got = act(catalog.base_vector(which), g);
      const StructureVector expected = which[0] == 'e' ? eta_from_minors(catalog, g) : rho_from_minors(catalog, g);
      if (got != expected) failure = matrix_text(g) + "; " + detail::first_difference(got, expected);
    }
    if (failure) {
      report.fail(id, anchor, *failure);
    } else {
      report.pass(id, anchor, std::to_string(cfg.trials) + " random invertible rational matrices");
    }
  }
  for (auto p : cfg.primes) {
    const std::string id = "minor.F" + std::to_string(p);
    const Catalog local = catalog.over(FieldDescriptor::prime(p));
    std::optional<std::string> failure;
    std::size_t seen = 0;
    for_each_invertible(3, p, cfg.budget, [&](const SquareMatrix& g, const SquareMatrix&) {
      ++seen;
      if (!failure) failure = minor_failure(local, g);
    });
    if (failure) {
      report.fail(id, anchor_eta, *failure);
    } else {
      report.pass(id, anchor_eta, "both parametrizations hold for all " + std::to_string(seen) + " elements of GL(3, F_" +
                                      std::to_string(p) + ")");
    }
  }

  report.sort_claims();
  report.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport check_action_axioms(const SuiteConfig& cfg, const Catalog& catalog) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "action";
  report.seed = cfg.seed;
  report.primes = cfg.primes;
  const std::string anchor = "right action of GL(3) on structure vectors";

  {
    const std::string id = "action.identity.rational";
    detail::ParamSampler sampler(detail::claim_seed(cfg.seed, id), cfg.sample_min, cfg.sample_max);
    const SquareMatrix e = SquareMatrix::identity(3, catalog.field());
    std::optional<std::string> failure;
    for (std::size_t t = 0; t < cfg.action_samples && !failure; ++t) {
      const StructureVector v = random_instance(sampler, catalog);
      const StructureVector got = act(v, e);
      if (got != v) failure = "v = " + v.to_string() + "; " + detail::first_difference(got, v);
    }
    if (failure) {
      report.fail(id, anchor, *failure);
    } else {
      report.pass(id, anchor, std::to_string(cfg.action_samples) + " family instances");
    }
  }

  const Catalog f2 = catalog.over(FieldDescriptor::prime(2));
  {
    const std::string id = "action.identity.F2";
    const SquareMatrix e = SquareMatrix::identity(3, f2.field());
    std::optional<std::string> failure;
    std::size_t count = 0;
    for (const auto& f : f2.families()) {
      detail::for_each_tuple(2, f.arity(), cfg.budget, [&](std::span<const Scalar> values) {
        if (failure) return;
        ++count;
        const StructureVector v = f.at(values);
        if (act(v, e) != v) failure = f.name + "(" + detail::format_params(*f.params, values) + ") moves";
      });
    }
    if (failure) {
      report.fail(id, anchor, *failure);
    } else {
      report.pass(id, anchor, "all " + std::to_string(count) + " family instances over F_2");
    }
  }
  {
    const std::string id = "action.composition.rational";
    detail::ParamSampler sampler(detail::claim_seed(cfg.seed, id), cfg.sample_min, cfg.sample_max);
    std::optional<std::string> failure;
    for (std::size_t t = 0; t < cfg.action_samples && !failure; ++t) {
      const StructureVector v = random_instance(sampler, catalog);
      const SquareMatrix g = sampler.invertible_matrix(3);
      const SquareMatrix h = sampler.invertible_matrix(3);
      const StructureVector lhs = act(act(v, g), h);
      const StructureVector rhs = act(v, g * h);
      if (lhs != rhs) {
        failure = "v = " + v.to_string() + ", g = " + g.to_string() + ", h = " + h.to_string() + "; " +
                  detail::first_difference(lhs, rhs);
      }
    }
    if (failure) {
      report.fail(id, anchor, *failure);
    } else {
      report.pass(id, anchor, std::to_string(cfg.action_samples) + " triples (v, g, h)");
    }
  }
  {
    // eta, rho and the first nonzero instance of each family over F_2.
    const std::string id = "action.composition.F2";
    std::vector<StructureVector> vectors{f2.base_vector("eta"), f2.base_vector("rho")};
    std::vector<std::vector<StructureVector>> per_family;
    for (const auto& f : f2.families()) {
      auto& list = per_family.emplace_back();
      detail::for_each_tuple(2, f.arity(), cfg.budget, [&](std::span<const Scalar> values) {
        StructureVector v = f.at(values);
        if (!v.is_zero()) list.push_back(std::move(v));
      });
    }
    // Round-robin over the families until ten distinct vectors are in hand.
    for (std::size_t depth = 0; vectors.size() < 10; ++depth) {
      bool any = false;
      for (const auto& list : per_family) {
        if (depth >= list.size() || vectors.size() >= 10) continue;
        any = true;
        if (std::find(vectors.begin(), vectors.end(), list[depth]) == vectors.end()) vectors.push_back(list[depth]);
      }
      if (!any) break;
    }
    std::vector<SquareMatrix> group;
    std::vector<SquareMatrix> inverses;
    for_each_invertible(3, 2, cfg.budget, [&](const SquareMatrix& g, const SquareMatrix& gi) {
      group.push_back(g);
      inverses.push_back(gi);
    });
    auto code = [](const SquareMatrix& m) {
      unsigned c = 0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) c = 2 * c + m(i, j).residue();
      }
      return c;
    };
    std::map<unsigned, std::size_t> index;
    for (std::size_t i = 0; i < group.size(); ++i) index.emplace(code(group[i]), i);

    std::optional<std::string> failure;
    for (const auto& v : vectors) {
      if (failure) break;
      std::vector<StructureVector> vg;
      for (std::size_t i = 0; i < group.size(); ++i) vg.push_back(act(v, group[i], inverses[i]));
      std::map<std::pair<StructureVector, std::size_t>, StructureVector> memo;
      for (std::size_t a = 0; a < group.size() && !failure; ++a) {
        for (std::size_t b = 0; b < group.size() && !failure; ++b) {
          auto key = std::make_pair(vg[a], b);
          auto it = memo.find(key);
          if (it == memo.end()) it = memo.emplace(key, act(vg[a], group[b], inverses[b])).first;
          const std::size_t ab = index.at(code(group[a] * group[b]));
          if (it->second != vg[ab]) {
            failure = "v = " + v.to_string() + ", g = " + group[a].to_string() + ", h = " + group[b].to_string();
          }
        }
      }
    }
    if (failure) {
      report.fail(id, anchor, *failure);
    } else {
      report.pass(id, anchor, std::to_string(vectors.size()) + " vectors against all pairs in GL(3, F_2)");
    }
  }
  {
    const std::string id = "action.is_lie.invariance";
    detail::ParamSampler sampler(detail::claim_seed(cfg.seed, id), cfg.sample_min, cfg.sample_max);
    const FieldDescriptor q = catalog.field();
    std::optional<std::string> failure;
    std::size_t lie = 0;
    for (std::size_t t = 0; t < cfg.lie_invariance_samples && !failure; ++t) {
      StructureVector v(3, q);
      switch (t % 3) {
        case 0:
          v = catalog.base_vector(t % 2 ? "rho" : "eta");
          break;
        case 1:
          v = random_instance(sampler, catalog);
          break;
        default:
          // An arbitrary antisymmetric vector; almost never Lie.
          for (const auto& [i, j, k] : ReducedVector3::kTriples) {
            const Scalar c = sampler.draw_scalar();
            v.set(i, j, k, c);
            v.set(j, i, k, -c);
          }
      }
      const SquareMatrix g = sampler.invertible_matrix(3);
      const bool before = is_lie(v);
      lie += before;
      if (is_lie(act(v, g)) != before) failure = "v = " + v.to_string() + ", g = " + g.to_string();
    }
    if (failure) {
      report.fail(id, anchor, *failure);
    } else {
      report.pass(id, anchor,
                  std::to_string(cfg.lie_invariance_samples) + " vectors, " + std::to_string(lie) + " of them Lie");
    }
  }

  report.sort_claims();
  report.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lieorbit
