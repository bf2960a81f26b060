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
#include <chrono>
#include <sstream>

#include "lieorbit/verify.hpp"
#include "verify_internal.hpp"

namespace lieorbit {

namespace {

struct Call {
  std::string family;
  std::vector<std::string> args;  // polynomials in the claim's parameters
};

std::vector<MultiPoly> expand(const Catalog& catalog, const VarTablePtr& params, const Call& call) {
  const ParamFamily& f = catalog.family(call.family);
  std::vector<MultiPoly> args;
  for (const auto& a : call.args) args.push_back(parse_poly(params, catalog.field(), a));
  return f.instantiate(args);
}

std::optional<std::string> first_nonzero(const std::vector<MultiPoly>& lhs, const std::vector<MultiPoly>& rhs) {
  for (std::size_t r = 0; r < lhs.size(); ++r) {
    const MultiPoly diff = lhs[r] - rhs[r];
    if (!diff.is_zero()) {
      const auto [i, j, k] = triple_of(r + 1, 3);
      std::ostringstream os;
      os << "component X" << i << j << k << " differs by " << diff.to_string();
      return os.str();
    }
  }
  return std::nullopt;
}

void identity_claim(VerificationReport& report, const Catalog& catalog, const std::string& id,
                    const std::string& anchor, const std::vector<std::string>& param_names, const Call& lhs,
                    const Call& rhs) {
  const VarTablePtr params = VarTable::make(param_names);
  const auto l = expand(catalog, params, lhs);
  const auto r = expand(catalog, params, rhs);
  if (auto diff = first_nonzero(l, r)) {
    report.fail(id, anchor, *diff);
  } else {
    report.pass(id, anchor, "27 components agree as polynomials");
  }
}

// lhs family evaluated at numerator_i / d^power_i, multiplied through by d^D
// with D large enough that every component becomes polynomial; compared
// against d^D times the rhs.
struct ClearedArg {
  std::string numerator;
  std::uint32_t power;
};

void cleared_identity(VerificationReport& report, const Catalog& catalog, const std::string& id,
                      const std::string& anchor, const std::vector<std::string>& param_names,
                      const std::string& lhs_family, const std::vector<ClearedArg>& lhs_args,
                      const std::string& denominator, const Call& rhs) {
  const VarTablePtr params = VarTable::make(param_names);
  const FieldDescriptor& field = catalog.field();
  const ParamFamily& f = catalog.family(lhs_family);
  std::vector<MultiPoly> numerators;
  for (const auto& a : lhs_args) numerators.push_back(parse_poly(params, field, a.numerator));
  const MultiPoly d = MultiPoly::variable(params, field, denominator);

  std::uint32_t depth = 0;
  for (const auto& c : f.components) {
    for (const auto& [e, coeff] : c.terms()) {
      std::uint32_t w = 0;
      for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * lhs_args[i].power;
      depth = std::max(depth, w);
    }
  }
  std::vector<MultiPoly> lhs;
  for (const auto& c : f.components) {
    MultiPoly sum(params, field);
    for (const auto& [e, coeff] : c.terms()) {
      MultiPoly term = MultiPoly::constant(params, coeff);
      std::uint32_t w = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        term *= numerators[i].pow(e[i]);
        w += e[i] * lhs_args[i].power;
      }
      sum += term * d.pow(depth - w);
    }
    lhs.push_back(std::move(sum));
  }
  std::vector<MultiPoly> rhs_poly = expand(catalog, params, rhs);
  const MultiPoly scale = d.pow(depth);
  for (auto& c : rhs_poly) c *= scale;
  if (auto diff = first_nonzero(lhs, rhs_poly)) {
    report.fail(id, anchor, *diff, "after multiplying by " + denominator + "^" + std::to_string(depth));
  } else {
    report.pass(id, anchor, "identity holds after multiplying by " + denominator + "^" + std::to_string(depth));
  }
}

// Evaluates the same inverse relation at rational samples with the
// denominator parameter nonzero.
void spot_check(VerificationReport& report, const SuiteConfig& cfg, const Catalog& catalog, const std::string& id,
                const std::string& anchor, const std::vector<std::string>& param_names, const std::string& lhs_family,
                const std::function<std::vector<Scalar>(std::span<const Scalar>)>& lhs_args, std::size_t denominator,
                const Call& rhs) {
  const VarTablePtr params = VarTable::make(param_names);
  const auto rhs_poly = expand(catalog, params, rhs);
  detail::ParamSampler sampler(detail::claim_seed(cfg.seed, id), cfg.sample_min, cfg.sample_max);
  std::size_t done = 0;
  while (done < cfg.trials) {
    std::vector<Scalar> values = sampler.draw(param_names.size());
    if (values[denominator].is_zero()) continue;
    const StructureVector got = catalog.family_eval(lhs_family, lhs_args(values));
    std::vector<Scalar> coords;
    for (const auto& c : rhs_poly) coords.push_back(c.evaluate(values));
    const StructureVector expected(3, std::move(coords));
    if (got != expected) {
      report.fail(id, anchor, detail::format_params(*params, values) + "; " + detail::first_difference(got, expected));
      return;
    }
    ++done;
  }
  report.pass(id, anchor, std::to_string(done) + " rational samples");
}

void containment_claim(VerificationReport& report, const Catalog& catalog, const std::string& system,
                       const std::string& family, const std::string& anchor) {
  const std::string id = "contain." + system + "." + family;
  const PolySystem& sys = catalog.system(system);
  const ParamFamily& f = catalog.family(family);
  for (std::size_t g = 0; g < sys.generators.size(); ++g) {
    const MultiPoly composed = sys.generators[g].substitute(f.components);
    if (!composed.is_zero()) {
      report.fail(id, anchor,
                  "generator " + std::to_string(g) + " (" + sys.generators[g].to_string() + ") restricts to " +
                      composed.to_string());
      return;
    }
  }
  report.pass(id, anchor, std::to_string(sys.generators.size()) + " generators vanish identically on " + family);
}

}  // namespace

VerificationReport check_cover_identities(const SuiteConfig& cfg, const Catalog& catalog) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "cover";
  report.seed = cfg.seed;
  report.primes = cfg.primes;

  const std::string heis = "Heisenberg family relations: ";
  identity_claim(report, catalog, "cover.eta_prime.eta1", heis + "eta'(1,mu,nu,lambda) = eta1(mu,nu,lambda)",
                 {"mu", "nu", "lambda"}, {"eta_prime", {"1", "mu", "nu", "lambda"}}, {"eta1", {"mu", "nu", "lambda"}});
  identity_claim(report, catalog, "cover.eta_prime.eta2", heis + "eta'(0,1,tau,-sigma) = eta2(tau,sigma)",
                 {"tau", "sigma"}, {"eta_prime", {"0", "1", "tau", "-sigma"}}, {"eta2", {"tau", "sigma"}});
  identity_claim(report, catalog, "cover.eta_prime.eta3", heis + "eta'(0,0,1,kappa) = eta3(kappa)", {"kappa"},
                 {"eta_prime", {"0", "0", "1", "kappa"}}, {"eta3", {"kappa"}});
  identity_claim(report, catalog, "cover.eta3.eta_prime", heis + "eta3(delta*gamma^2) = eta'(0,0,gamma,delta)",
                 {"gamma", "delta"}, {"eta3", {"delta*gamma^2"}}, {"eta_prime", {"0", "0", "gamma", "delta"}});

  cleared_identity(report, catalog, "cover.eta1.eta_prime.cleared",
                   heis + "eta1(beta/alpha, gamma/alpha, delta*alpha^2) = eta'(alpha,beta,gamma,delta), alpha != 0",
                   {"alpha", "beta", "gamma", "delta"}, "eta1", {{"beta", 1}, {"gamma", 1}, {"delta*alpha^2", 0}},
                   "alpha", {"eta_prime", {"alpha", "beta", "gamma", "delta"}});
  cleared_identity(report, catalog, "cover.eta2.eta_prime.cleared",
                   heis + "eta2(gamma/beta, -delta*beta^2) = eta'(0,beta,gamma,delta), beta != 0",
                   {"beta", "gamma", "delta"}, "eta2", {{"gamma", 1}, {"-delta*beta^2", 0}}, "beta",
                   {"eta_prime", {"0", "beta", "gamma", "delta"}});
  spot_check(report, cfg, catalog, "cover.eta1.eta_prime.sampled",
             heis + "eta1(beta/alpha, gamma/alpha, delta*alpha^2) = eta'(alpha,beta,gamma,delta), alpha != 0",
             {"alpha", "beta", "gamma", "delta"}, "eta1",
             [](std::span<const Scalar> v) {
               return std::vector<Scalar>{v[1] / v[0], v[2] / v[0], v[3] * v[0] * v[0]};
             },
             0, {"eta_prime", {"alpha", "beta", "gamma", "delta"}});
  spot_check(report, cfg, catalog, "cover.eta2.eta_prime.sampled",
             heis + "eta2(gamma/beta, -delta*beta^2) = eta'(0,beta,gamma,delta), beta != 0",
             {"beta", "gamma", "delta"}, "eta2",
             [](std::span<const Scalar> v) {
               return std::vector<Scalar>{v[1] / v[0], -(v[2] * v[0] * v[0])};
             },
             0, {"eta_prime", {"0", "beta", "gamma", "delta"}});

  const std::string g2a1 = "g2+a1 family relations: ";
  identity_claim(report, catalog, "cover.rho1.rho_prime",
                 g2a1 + "rho1(alpha,beta,gamma,mu,nu,phi) = rho'(alpha,beta,gamma,mu,nu,phi,1)",
                 {"alpha", "beta", "gamma", "mu", "nu", "phi"}, {"rho1", {"alpha", "beta", "gamma", "mu", "nu", "phi"}},
                 {"rho_prime", {"alpha", "beta", "gamma", "mu", "nu", "phi", "1"}});
  identity_claim(report, catalog, "cover.rho2.rho_prime",
                 g2a1 + "rho2(sigma,tau,rho,zeta) = rho'(0,-1,-zeta,sigma,tau,rho,1)", {"sigma", "tau", "rho", "zeta"},
                 {"rho2", {"sigma", "tau", "rho", "zeta"}},
                 {"rho_prime", {"0", "-1", "-zeta", "sigma", "tau", "rho", "1"}});
  identity_claim(report, catalog, "cover.rho3.rho_prime", g2a1 + "rho3(theta,xi,kappa) = rho'(0,0,1,theta,xi,kappa,1)",
                 {"theta", "xi", "kappa"}, {"rho3", {"theta", "xi", "kappa"}},
                 {"rho_prime", {"0", "0", "1", "theta", "xi", "kappa", "1"}});
  identity_claim(report, catalog, "cover.eta_prime.rho_prime",
                 g2a1 + "eta'(alpha,beta,gamma,delta) = rho'(alpha,beta,gamma,gamma,beta,alpha,delta)",
                 {"alpha", "beta", "gamma", "delta"}, {"eta_prime", {"alpha", "beta", "gamma", "delta"}},
                 {"rho_prime", {"alpha", "beta", "gamma", "gamma", "beta", "alpha", "delta"}});

  for (const char* f : {"eta_prime", "eta1", "eta2", "eta3"}) {
    containment_claim(report, catalog, "S", f, "Heisenberg closure: S lies in the ideal of V");
    containment_claim(report, catalog, "Sprime", f, "g2+a1 closure: V lies in V(S')");
  }
  for (const char* f : {"rho_prime", "rho1", "rho2", "rho3"}) {
    containment_claim(report, catalog, "T", f, "g2+a1 closure: T lies in the ideal of U");
  }
  for (const auto& f : catalog.families()) {
    containment_claim(report, catalog, "jacobi3", f.name, "every family instance is a Lie structure vector");
  }

  report.sort_claims();
  report.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lieorbit
