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

#include "lieorbit/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace lieorbit {

namespace {

const FieldDescriptor kQ = FieldDescriptor::rationals();

// Coordinate lists in lexicographic (i,j,k) order, 27 entries each.

const std::array<const char*, 27> kEtaPrime = {
    "0", "0", "0",
    "alpha*gamma*delta", "-beta*gamma*delta", "gamma^2*delta",
    "alpha*beta*delta", "-beta^2*delta", "beta*gamma*delta",
    "-alpha*gamma*delta", "beta*gamma*delta", "-gamma^2*delta",
    "0", "0", "0",
    "alpha^2*delta", "-alpha*beta*delta", "alpha*gamma*delta",
    "-alpha*beta*delta", "beta^2*delta", "-beta*gamma*delta",
    "-alpha^2*delta", "alpha*beta*delta", "-alpha*gamma*delta",
    "0", "0", "0"};

const std::array<const char*, 27> kEta1 = {
    "0", "0", "0",
    "nu*lambda", "-mu*nu*lambda", "nu^2*lambda",
    "mu*lambda", "-mu^2*lambda", "mu*nu*lambda",
    "-nu*lambda", "mu*nu*lambda", "-nu^2*lambda",
    "0", "0", "0",
    "lambda", "-mu*lambda", "nu*lambda",
    "-mu*lambda", "mu^2*lambda", "-mu*nu*lambda",
    "-lambda", "mu*lambda", "-nu*lambda",
    "0", "0", "0"};

const std::array<const char*, 27> kEta2 = {
    "0", "0", "0",
    "0", "sigma*tau", "-sigma*tau^2",
    "0", "sigma", "-sigma*tau",
    "0", "-sigma*tau", "sigma*tau^2",
    "0", "0", "0",
    "0", "0", "0",
    "0", "-sigma", "sigma*tau",
    "0", "0", "0",
    "0", "0", "0"};

const std::array<const char*, 27> kEta3 = {
    "0", "0", "0",
    "0", "0", "kappa",
    "0", "0", "0",
    "0", "0", "-kappa",
    "0", "0", "0",
    "0", "0", "0",
    "0", "0", "0",
    "0", "0", "0",
    "0", "0", "0"};

const std::array<const char*, 27> kRhoPrime = {
    "0", "0", "0",
    "chi1*chi2*delta", "-psi1*chi2*delta", "omega1*chi2*delta",
    "chi1*psi2*delta", "-psi1*psi2*delta", "omega1*psi2*delta",
    "-chi1*chi2*delta", "psi1*chi2*delta", "-omega1*chi2*delta",
    "0", "0", "0",
    "chi1*omega2*delta", "-psi1*omega2*delta", "omega1*omega2*delta",
    "-chi1*psi2*delta", "psi1*psi2*delta", "-omega1*psi2*delta",
    "-chi1*omega2*delta", "psi1*omega2*delta", "-omega1*omega2*delta",
    "0", "0", "0"};

const std::array<const char*, 27> kRho1 = {
    "0", "0", "0",
    "mu*alpha", "-mu*beta", "mu*gamma",
    "nu*alpha", "-nu*beta", "nu*gamma",
    "-mu*alpha", "mu*beta", "-mu*gamma",
    "0", "0", "0",
    "phi*alpha", "-phi*beta", "phi*gamma",
    "-nu*alpha", "nu*beta", "-nu*gamma",
    "-phi*alpha", "phi*beta", "-phi*gamma",
    "0", "0", "0"};

const std::array<const char*, 27> kRho2 = {
    "0", "0", "0",
    "0", "sigma", "-sigma*zeta",
    "0", "tau", "-tau*zeta",
    "0", "-sigma", "sigma*zeta",
    "0", "0", "0",
    "0", "rho", "-rho*zeta",
    "0", "-tau", "tau*zeta",
    "0", "-rho", "rho*zeta",
    "0", "0", "0"};

const std::array<const char*, 27> kRho3 = {
    "0", "0", "0",
    "0", "0", "theta",
    "0", "0", "xi",
    "0", "0", "-theta",
    "0", "0", "0",
    "0", "0", "kappa",
    "0", "0", "-xi",
    "0", "0", "-kappa",
    "0", "0", "0"};

const std::array<const char*, 7> kS3 = {
    "X121 - X233", "X131 + X232", "X122 + X133",
    "X122^2 + X123*X132", "X121^2 - X123*X231", "X131^2 + X132*X231",
    "X121*X131 + X122*X231"};

const std::array<const char*, 9> kT3 = {
    "X121*X132 - X122*X131", "X121*X232 - X122*X231", "X131*X232 - X132*X231",
    "X121*X133 - X123*X131", "X121*X233 - X123*X231", "X232*X123 - X122*X233",
    "X122*X133 - X123*X132", "X132*X233 - X133*X232", "X233*X131 - X133*X231"};

// The three linear forms added to T; also the f_i defining W.
const std::array<const char*, 3> kLinear = {"X121 - X233", "X131 + X232", "X122 + X133"};

ParamFamily make_family(std::string name, std::vector<std::string> params,
                        const std::array<const char*, 27>& coords) {
  ParamFamily f{std::move(name), VarTable::make(std::move(params)), kQ, {}};
  f.components.reserve(27);
  for (const char* c : coords) f.components.push_back(parse_poly(f.params, kQ, c));
  return f;
}

std::map<std::string, MultiPoly> rho1_abbreviations(const VarTablePtr& params) {
  return {{"A1", parse_poly(params, kQ, "mu*alpha - phi*gamma")},
          {"A2", parse_poly(params, kQ, "nu*alpha - phi*beta")}};
}

Predicate make_predicate(const VarTablePtr& params, const std::vector<std::string>& atoms,
                         const std::map<std::string, MultiPoly>& abbreviations) {
  Predicate pred;
  for (const auto& text : atoms) {
    const auto ne = text.find("!=");
    const auto eq = text.find("==");
    const bool nonzero = ne != std::string::npos;
    const auto at = nonzero ? ne : eq;
    if (at == std::string::npos) throw UsageError("predicate atom needs == or !=: " + text);
    const std::string rhs = text.substr(at + 2);
    if (rhs.find_first_not_of(" 0") != std::string::npos) {
      throw UsageError("predicate atoms compare against 0: " + text);
    }
    pred.atoms.push_back({parse_poly(params, kQ, text.substr(0, at), abbreviations), nonzero, text});
  }
  return pred;
}

struct EntryText {
  const char* numerator;
  const char* denominator = "1";
};

WitnessMatrix make_matrix(const VarTablePtr& params, const std::array<EntryText, 9>& entries,
                          const char* det, const std::map<std::string, MultiPoly>& abbreviations) {
  WitnessMatrix m;
  for (const auto& e : entries) {
    RationalEntry entry{parse_poly(params, kQ, e.numerator, abbreviations),
                        parse_poly(params, kQ, e.denominator, abbreviations)};
    if (entry.denominator.term_count() != 1) throw UsageError("witness denominators must be monomials");
    m.entries.push_back(std::move(entry));
  }
  if (det != nullptr) m.expected_det = parse_poly(params, kQ, det, abbreviations);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

StructureVector ParamFamily::at(std::span<const Scalar> values) const {
  if (values.size() != arity()) {
    throw UsageError(name + " takes " + std::to_string(arity()) + " parameters, got " +
                     std::to_string(values.size()));
  }
  for (const auto& v : values) {
    if (v.field() != field) throw UsageError(name + ": parameter from field " + v.field().name());
  }
  std::vector<Scalar> coords;
  coords.reserve(components.size());
  for (const auto& c : components) coords.push_back(c.evaluate(values));
  return StructureVector(3, std::move(coords));
}

std::vector<MultiPoly> ParamFamily::instantiate(std::span<const MultiPoly> args) const {
  if (args.size() != arity()) throw UsageError(name + ": wrong number of arguments");
  std::vector<MultiPoly> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.substitute(args));
  return out;
}

ParamFamily ParamFamily::over(const FieldDescriptor& target) const {
  ParamFamily f{name, params, target, {}};
  for (const auto& c : components) f.components.push_back(c.over(target));
  return f;
}

bool Predicate::holds(std::span<const Scalar> values) const {
  for (const auto& a : atoms) {
    if (a.poly.evaluate(values).is_zero() == a.nonzero) return false;
  }
  return true;
}

std::string Predicate::to_string() const {
  std::string s;
  for (const auto& a : atoms) {
    if (!s.empty()) s += ", ";
    s += a.text;
  }
  return s.empty() ? "true" : s;
}

Predicate Predicate::over(const FieldDescriptor& target) const {
  Predicate p;
  for (const auto& a : atoms) p.atoms.push_back({a.poly.over(target), a.nonzero, a.text});
  return p;
}

Scalar RationalEntry::evaluate(std::span<const Scalar> values) const {
  return numerator.evaluate(values) / denominator.evaluate(values);
}

std::string RationalEntry::to_string() const {
  const std::string num = numerator.to_string();
  const std::string den = denominator.to_string();
  if (den == "1") return num;
  return "(" + num + ")/(" + den + ")";
}

RationalEntry RationalEntry::over(const FieldDescriptor& target) const {
  return {numerator.over(target), denominator.over(target)};
}

SquareMatrix WitnessMatrix::instantiate(std::span<const Scalar> values) const {
  if (entries.size() != 9) throw UsageError("witness matrices are 3x3");
  SquareMatrix g(3, entries.front().numerator.field());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g(i, j) = entries[i * 3 + j].evaluate(values);
  }
  return g;
}

WitnessMatrix WitnessMatrix::over(const FieldDescriptor& target) const {
  WitnessMatrix m;
  for (const auto& e : entries) m.entries.push_back(e.over(target));
  if (expected_det) m.expected_det = expected_det->over(target);
  return m;
}

// ---------------------------------------------------------------------------

Catalog Catalog::standard() {
  Catalog c;
  c.families_.push_back(make_family("eta_prime", {"alpha", "beta", "gamma", "delta"}, kEtaPrime));
  c.families_.push_back(make_family("eta1", {"mu", "nu", "lambda"}, kEta1));
  c.families_.push_back(make_family("eta2", {"tau", "sigma"}, kEta2));
  c.families_.push_back(make_family("eta3", {"kappa"}, kEta3));
  c.families_.push_back(make_family(
      "rho_prime", {"chi1", "psi1", "omega1", "chi2", "psi2", "omega2", "delta"}, kRhoPrime));
  c.families_.push_back(make_family("rho1", {"alpha", "beta", "gamma", "mu", "nu", "phi"}, kRho1));
  c.families_.push_back(make_family("rho2", {"sigma", "tau", "rho", "zeta"}, kRho2));
  c.families_.push_back(make_family("rho3", {"theta", "xi", "kappa"}, kRho3));

  const VarTablePtr x = structure_vars(3);
  PolySystem s1{"S1", x, kQ, {}}, s2{"S2", x, kQ, {}}, s3{"S3", x, kQ, {}}, t3{"T3", x, kQ, {}};
  auto var = [&](int i, int j, int k) { return MultiPoly::variable(x, kQ, x->name(index_of(i, j, k, 3) - 1)); };
  for (int i = 1; i <= 3; ++i) {
    for (int k = 1; k <= 3; ++k) s1.generators.push_back(var(i, i, k));
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) s2.generators.push_back(var(i, j, k) + var(j, i, k));
    }
  }
  for (const char* g : kS3) s3.generators.push_back(parse_poly(x, kQ, g));
  for (const char* g : kT3) t3.generators.push_back(parse_poly(x, kQ, g));
  PolySystem w{"W_polys", x, kQ, {}};
  for (const char* g : kLinear) w.generators.push_back(parse_poly(x, kQ, g));
  c.systems_ = {s1, s2, s3, t3, w, jacobi_generators(3, kQ)};
  c.rebuild_derived_systems();

  {
    const ParamFamily& eta1 = c.family("eta1");
    OrbitWitness g1{"heisenberg.g1", "Heisenberg orbit: eta.g1(mu,nu,lambda) = eta1(mu,nu,lambda) for lambda != 0",
                    "eta", "eta1", make_predicate(eta1.params, {"lambda != 0"}, {}),
                    make_matrix(eta1.params,
                                {{{"1", "lambda"}, {"0"}, {"0"},
                                  {"mu"}, {"1"}, {"0"},
                                  {"-nu"}, {"0"}, {"1"}}},
                                nullptr, {})};
    const ParamFamily& eta2 = c.family("eta2");
    OrbitWitness g2{"heisenberg.g2", "Heisenberg orbit: eta.g2(tau,sigma) = eta2(tau,sigma) for sigma != 0",
                    "eta", "eta2", make_predicate(eta2.params, {"sigma != 0"}, {}),
                    make_matrix(eta2.params,
                                {{{"0"}, {"1", "sigma"}, {"0"},
                                  {"1"}, {"0"}, {"0"},
                                  {"0"}, {"tau"}, {"1"}}},
                                nullptr, {})};
    const ParamFamily& eta3 = c.family("eta3");
    OrbitWitness g3{"heisenberg.g3", "Heisenberg orbit: eta.g3(kappa) = eta3(kappa) for kappa != 0",
                    "eta", "eta3", make_predicate(eta3.params, {"kappa != 0"}, {}),
                    make_matrix(eta3.params,
                                {{{"0"}, {"0"}, {"1", "kappa"},
                                  {"1"}, {"0"}, {"0"},
                                  {"0"}, {"1"}, {"0"}}},
                                nullptr, {})};
    c.heisenberg_witnesses_ = {g1, g2, g3};
  }

  const std::string table_anchor = "g2+a1 transition table, ";
  {
    const VarTablePtr p = c.family("rho1").params;
    const auto abbr = rho1_abbreviations(p);
    auto row = [&](std::string id, std::vector<std::string> atoms) {
      atoms.insert(atoms.begin(), "alpha != 0");
      TableRow r{"table.rho1." + id, "", "rho1", make_predicate(p, atoms, abbr), std::nullopt};
      r.anchor = table_anchor + "rho1 with " + r.condition.to_string();
      return r;
    };
    TableRow r1 = row("row1", {"A1 != 0", "A2 != 0"});
    r1.matrix = make_matrix(p,
                            {{{"nu"}, {"phi"}, {"0"},
                              {"mu*beta - nu*gamma"}, {"A1"}, {"A2"},
                              {"-gamma"}, {"0"}, {"alpha"}}},
                            "A1*A2", abbr);
    TableRow r2 = row("row2", {"A1 == 0", "A2 != 0", "phi*gamma != 0"});
    r2.matrix = make_matrix(p,
                            {{{"beta"}, {"alpha"}, {"alpha*A2", "phi*gamma"},
                              {"-gamma*A2", "alpha"}, {"0"}, {"A2"},
                              {"phi*beta", "alpha"}, {"phi"}, {"0"}}},
                            "-A2^2", abbr);
    TableRow r3 = row("row3", {"A1 == 0", "A2 != 0", "phi == 0"});
    r3.matrix = make_matrix(p,
                            {{{"1"}, {"0"}, {"0"},
                              {"-gamma*nu"}, {"0"}, {"alpha*nu"},
                              {"-gamma + beta"}, {"alpha"}, {"alpha"}}},
                            "-alpha^2*nu", abbr);
    TableRow r4 = row("row4", {"A1 == 0", "A2 != 0", "phi != 0", "gamma == 0"});
    r4.matrix = make_matrix(p,
                            {{{"nu"}, {"phi"}, {"0"},
                              {"0"}, {"0"}, {"A2"},
                              {"beta"}, {"alpha"}, {"0"}}},
                            "-A2^2", abbr);
    TableRow r5 = row("row5", {"A1 != 0", "A2 == 0", "beta != 0", "gamma != 0"});
    r5.matrix = make_matrix(p,
                            {{{"0"}, {"alpha^2*mu*gamma"}, {"alpha*gamma*phi*beta"},
                              {"beta*A1", "alpha"}, {"A1"}, {"0"},
                              {"-A1", "alpha"}, {"0"}, {"A1", "gamma"}}},
                            "-beta*A1^3", abbr);
    TableRow r6 = row("row6", {"A1 != 0", "A2 == 0", "gamma == 0"});
    r6.matrix = make_matrix(p,
                            {{{"-mu"}, {"0"}, {"phi"},
                              {"beta*mu"}, {"mu*alpha"}, {"0"},
                              {"beta"}, {"alpha"}, {"1"}}},
                            "-mu^2*alpha", abbr);
    TableRow r7 = row("row7", {"A1 != 0", "A2 == 0", "beta == 0"});
    r7.matrix = make_matrix(p,
                            {{{"mu"}, {"0"}, {"-phi"},
                              {"0"}, {"A1"}, {"0"},
                              {"-gamma"}, {"0"}, {"alpha"}}},
                            "A1^2", abbr);
    TableRow r8 = row("closure", {"A1 == 0", "A2 == 0"});
    c.rows_.insert(c.rows_.end(), {r1, r2, r3, r4, r5, r6, r7, r8});
  }
  {
    const VarTablePtr p = c.family("rho2").params;
    auto row = [&](std::string id, std::vector<std::string> atoms) {
      TableRow r{"table.rho2." + id, "", "rho2", make_predicate(p, atoms, {}), std::nullopt};
      r.anchor = table_anchor + "rho2 with " + r.condition.to_string();
      return r;
    };
    TableRow r1 = row("row1", {"rho != 0", "tau*zeta - sigma != 0"});
    r1.matrix = make_matrix(p,
                            {{{"0"}, {"-sigma"}, {"-tau"},
                              {"tau*zeta - sigma"}, {"rho*zeta"}, {"rho"},
                              {"1"}, {"0"}, {"0"}}},
                            "rho*(tau*zeta - sigma)", {});
    TableRow r2 = row("row2", {"rho != 0", "tau*zeta - sigma == 0"});
    r2.matrix = make_matrix(p,
                            {{{"tau"}, {"rho"}, {"0"},
                              {"0"}, {"rho*zeta"}, {"rho"},
                              {"1"}, {"0"}, {"0"}}},
                            "rho^2", {});
    TableRow r3 = row("row3", {"rho == 0", "tau*zeta - sigma != 0"});
    r3.matrix = make_matrix(p,
                            {{{"0"}, {"sigma"}, {"tau"},
                              {"tau*zeta - sigma"}, {"0"}, {"0"},
                              {"0"}, {"zeta"}, {"1"}}},
                            "(tau*zeta - sigma)^2", {});
    TableRow r4 = row("closure", {"rho == 0", "tau*zeta - sigma == 0"});
    c.rows_.insert(c.rows_.end(), {r1, r2, r3, r4});
  }
  {
    const VarTablePtr p = c.family("rho3").params;
    auto row = [&](std::string id, std::vector<std::string> atoms) {
      TableRow r{"table.rho3." + id, "", "rho3", make_predicate(p, atoms, {}), std::nullopt};
      r.anchor = table_anchor + "rho3 with " + r.condition.to_string();
      return r;
    };
    TableRow r1 = row("row1", {"kappa != 0", "xi != 0"});
    r1.matrix = make_matrix(p,
                            {{{"1"}, {"kappa + theta", "xi"}, {"1"},
                              {"-xi"}, {"-kappa"}, {"0"},
                              {"1"}, {"0"}, {"0"}}},
                            "kappa", {});
    TableRow r2 = row("row2", {"kappa != 0", "xi == 0"});
    r2.matrix = make_matrix(p,
                            {{{"-theta", "kappa"}, {"0"}, {"1"},
                              {"0"}, {"-kappa"}, {"0"},
                              {"1"}, {"0"}, {"0"}}},
                            "kappa", {});
    TableRow r3 = row("row3", {"kappa == 0", "xi != 0"});
    r3.matrix = make_matrix(p,
                            {{{"0"}, {"theta", "xi"}, {"1"},
                              {"-xi"}, {"0"}, {"0"},
                              {"0"}, {"1"}, {"0"}}},
                            "-xi", {});
    TableRow r4 = row("closure", {"kappa == 0", "xi == 0"});
    c.rows_.insert(c.rows_.end(), {r1, r2, r3, r4});
  }
  return c;
}

Catalog Catalog::over(const FieldDescriptor& target) const {
  Catalog c;
  c.field_ = target;
  for (const auto& f : families_) c.families_.push_back(f.over(target));
  for (const auto& s : systems_) c.systems_.push_back(s.over(target));
  for (const auto& w : heisenberg_witnesses_) {
    c.heisenberg_witnesses_.push_back({w.id, w.anchor, w.base, w.family, w.condition.over(target), w.matrix.over(target)});
  }
  for (const auto& r : rows_) {
    TableRow row{r.id, r.anchor, r.family, r.condition.over(target), std::nullopt};
    if (r.matrix) row.matrix = r.matrix->over(target);
    c.rows_.push_back(std::move(row));
  }
  return c;
}

StructureVector Catalog::base_vector(std::string_view name) const {
  StructureVector v(3, field_);
  const Scalar one = Scalar::one(field_);
  if (name == "eta") {
    v.set(2, 3, 1, one);
    v.set(3, 2, 1, -one);
  } else if (name == "rho") {
    v.set(1, 2, 1, one);
    v.set(2, 1, 1, -one);
  } else if (name != "zero") {
    throw UsageError("unknown base vector '" + std::string(name) + "'");
  }
  return v;
}

const ParamFamily& Catalog::family(std::string_view name) const {
  for (const auto& f : families_) {
    if (f.name == name) return f;
  }
  throw UsageError("unknown family '" + std::string(name) + "'");
}

StructureVector Catalog::family_eval(std::string_view name, std::span<const Scalar> values) const {
  return family(name).at(values);
}

const std::vector<std::string>& Catalog::system_names() {
  static const std::vector<std::string> names = {"S1", "S2", "S3", "S", "T3", "T", "Sprime", "T_S3", "W_polys", "jacobi3"};
  return names;
}

const PolySystem& Catalog::system(std::string_view name) const {
  for (const auto& s : systems_) {
    if (s.name == name) return s;
  }
  throw UsageError("unknown system '" + std::string(name) + "'");
}

PolySystem& Catalog::mutable_system(std::string_view name) {
  for (auto& s : systems_) {
    if (s.name == name) return s;
  }
  throw UsageError("unknown system '" + std::string(name) + "'");
}

void Catalog::rebuild_derived_systems() {
  std::erase_if(systems_, [](const PolySystem& s) {
    return s.name == "S" || s.name == "T" || s.name == "Sprime" || s.name == "T_S3";
  });
  const PolySystem& s1 = system("S1");
  const PolySystem& s2 = system("S2");
  const PolySystem& s3 = system("S3");
  const PolySystem& t3 = system("T3");
  PolySystem s = s1.united_with(s2, "S").united_with(s3, "S");
  PolySystem t = s1.united_with(s2, "T").united_with(t3, "T");
  PolySystem linear{"linear", t.vars, t.field, {}};
  for (const char* g : kLinear) linear.generators.push_back(parse_poly(t.vars, kQ, g).over(t.field));
  PolySystem sprime = t.united_with(linear, "Sprime");
  PolySystem t_s3 = t.united_with(s3, "T_S3");
  systems_.push_back(std::move(s));
  systems_.push_back(std::move(t));
  systems_.push_back(std::move(sprime));
  systems_.push_back(std::move(t_s3));
}

std::vector<OrbitWitness> Catalog::witnesses() const {
  std::vector<OrbitWitness> out = heisenberg_witnesses_;
  for (const auto& r : rows_) {
    if (r.matrix) out.push_back({r.id, r.anchor, "rho", r.family, r.condition, *r.matrix});
  }
  return out;
}

WitnessInstance Catalog::witness(std::string_view id, std::span<const Scalar> values) const {
  for (const auto& w : witnesses()) {
    if (w.id != id) continue;
    if (values.size() != family(w.family).arity()) throw UsageError(w.id + ": wrong number of parameters");
    if (!w.condition.holds(values)) throw UsageError(w.id + " needs " + w.condition.to_string());
    WitnessInstance out{SquareMatrix(3, field_), std::nullopt};
    try {
      out.matrix = w.matrix.instantiate(values);
    } catch (const DivisionByZero&) {
      throw std::logic_error(w.id + ": zero denominator although the condition holds");
    }
    if (w.matrix.expected_det) out.expected_det = w.matrix.expected_det->evaluate(values);
    return out;
  }
  throw UsageError("unknown witness '" + std::string(id) + "'");
}

void Catalog::negate_s3_term(std::size_t generator, std::size_t term) {
  PolySystem& s3 = mutable_system("S3");
  if (generator >= s3.generators.size()) throw UsageError("S3 has no generator " + std::to_string(generator));
  MultiPoly& g = s3.generators[generator];
  if (term >= g.term_count()) throw UsageError("S3 generator has no term " + std::to_string(term));
  std::vector<MultiPoly::Term> terms(g.terms().begin(), g.terms().end());
  terms[term].second = -terms[term].second;
  g = MultiPoly::build(g.vars_ptr(), g.field(), terms);
  rebuild_derived_systems();
}

void Catalog::perturb_table_entry(std::size_t matrix_row, std::size_t entry) {
  std::size_t seen = 0;
  for (auto& r : rows_) {
    if (!r.matrix) continue;
    if (seen++ != matrix_row) continue;
    if (entry >= r.matrix->entries.size()) throw UsageError("witness matrices have 9 entries");
    RationalEntry& e = r.matrix->entries[entry];
    if (e.numerator.is_zero()) {
      e.numerator = MultiPoly::constant(e.numerator.vars_ptr(), e.numerator.field(), 1);
    } else {
      e.numerator = -e.numerator;
    }
    return;
  }
  throw UsageError("no matrix-carrying table row " + std::to_string(matrix_row));
}

}  // namespace lieorbit
