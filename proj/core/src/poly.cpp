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

#include "lieorbit/poly.hpp"

#include <cctype>
#include <sstream>

namespace lieorbit {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!lookup_.emplace(names_[i], i).second) {
      throw UsageError("duplicate indeterminate '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  const auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t VarTable::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UsageError("unknown indeterminate '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

Assignment::Assignment(VarTablePtr vars, FieldDescriptor field)
    : vars_(std::move(vars)), field_(field), values_(vars_->size()) {}

Assignment Assignment::from_map(VarTablePtr vars, FieldDescriptor field,
                                const std::map<std::string, Scalar>& values) {
  Assignment a(std::move(vars), field);
  for (const auto& [name, value] : values) a.set(name, value);
  if (!a.is_total()) {
    for (std::size_t i = 0; i < a.values_.size(); ++i) {
      if (!a.values_[i]) throw UsageError("assignment misses '" + a.vars_->name(i) + "'");
    }
  }
  return a;
}

void Assignment::set(std::string_view name, Scalar value) { set(vars_->index(name), std::move(value)); }

void Assignment::set(std::size_t index, Scalar value) {
  if (value.field() != field_) throw UsageError("assignment value from another field");
  values_.at(index) = std::move(value);
}

bool Assignment::is_total() const noexcept {
  for (const auto& v : values_) {
    if (!v) return false;
  }
  return true;
}

const Scalar& Assignment::at(std::size_t index) const {
  const auto& v = values_.at(index);
  if (!v) throw UsageError("assignment misses '" + vars_->name(index) + "'");
  return *v;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(VarTablePtr vars, FieldDescriptor field)
    : vars_(std::move(vars)), field_(field) {
  if (!vars_) throw UsageError("polynomial needs a variable table");
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::build(VarTablePtr vars, FieldDescriptor field, std::span<const Term> terms) {
  MultiPoly p(std::move(vars), field);
  for (const auto& [e, c] : terms) {
    if (e.size() != p.vars_->size()) {
      throw UsageError("exponent vector has arity " + std::to_string(e.size()) + ", table has " +
                       std::to_string(p.vars_->size()));
    }
    if (c.field() != field) throw UsageError("coefficient from another field");
    p.add_term(e, c);
  }
  return p;
}

MultiPoly MultiPoly::constant(VarTablePtr vars, const Scalar& c) {
  MultiPoly p(std::move(vars), c.field());
  p.add_term(Exponents(p.vars_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::constant(VarTablePtr vars, FieldDescriptor field, std::int64_t c) {
  return constant(std::move(vars), Scalar::from_int(field, c));
}

MultiPoly MultiPoly::variable(VarTablePtr vars, FieldDescriptor field, std::string_view name) {
  MultiPoly p(std::move(vars), field);
  Exponents e(p.vars_->size(), 0);
  e[p.vars_->index(name)] = 1;
  p.add_term(e, Scalar::one(field));
  return p;
}

std::uint32_t MultiPoly::total_degree() const noexcept {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const noexcept {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

Scalar MultiPoly::coefficient(const Exponents& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void MultiPoly::require_compatible(const MultiPoly& other) const {
  if (vars_ != other.vars_ && !(*vars_ == *other.vars_)) {
    throw UsageError("polynomials over different variable tables");
  }
  if (field_ != other.field_) throw UsageError("polynomials over different fields");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly r(a.vars_, a.field_);
  Exponents e(a.vars_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.field() != field_) throw UsageError("scalar from another field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result = constant(vars_, field_, 1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar MultiPoly::evaluate(const Assignment& point) const {
  if (!(*point.vars() == *vars_)) throw UsageError("assignment over a different variable table");
  if (point.field() != field_) throw UsageError("assignment over a different field");
  Scalar sum = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= point.at(i).pow(e[i]);
    }
    sum += t;
  }
  return sum;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != vars_->size()) throw UsageError("evaluation point has the wrong arity");
  Scalar sum = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 1) {
        t *= point[i];
      } else if (e[i] != 0) {
        t *= point[i].pow(e[i]);
      }
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != vars_->size()) throw UsageError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const VarTablePtr& target = images.front().vars_ptr();
  const FieldDescriptor& field = images.front().field();
  for (const auto& img : images) {
    if (!(*img.vars_ptr() == *target) || img.field() != field) {
      throw UsageError("substitution images disagree on table or field");
    }
  }
  if (field != field_) throw UsageError("substitution images over a different field");
  MultiPoly result(target, field);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= images[i].pow(e[i]);
    }
    result += t;
  }
  return result;
}

MultiPoly MultiPoly::over(const FieldDescriptor& target) const {
  if (target == field_) return *this;
  if (field_.is_prime()) throw UsageError("cannot lift prime-field coefficients into " + target.name());
  MultiPoly r(vars_, target);
  for (const auto& [e, c] : terms_) {
    r.add_term(e, Scalar::from_fraction(target, c.rational().get_num(), c.rational().get_den()));
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += vars_->name(i);
      if (e[i] > 1) monomial += '^' + std::to_string(e[i]);
    }
    // Over Q print signs; over F_p residues are already canonical.
    bool negative = !field_.is_prime() && sgn(c.rational()) < 0;
    const Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (monomial.empty()) {
      os << magnitude;
    } else if (magnitude.is_one()) {
      os << monomial;
    } else {
      os << magnitude << '*' << monomial;
    }
    first = false;
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(const VarTablePtr& vars, const FieldDescriptor& field, std::string_view text,
             const std::map<std::string, MultiPoly>& abbreviations)
      : vars_(vars), field_(field), text_(text), abbreviations_(abbreviations) {}

  MultiPoly parse() {
    MultiPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("polynomial parse error at " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(vars_, Scalar::from_int(field_, mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (const auto it = abbreviations_.find(name); it != abbreviations_.end()) {
        return it->second;
      }
      if (!vars_->find(name)) fail("unknown identifier '" + name + "'");
      return MultiPoly::variable(vars_, field_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const VarTablePtr& vars_;
  const FieldDescriptor& field_;
  std::string_view text_;
  const std::map<std::string, MultiPoly>& abbreviations_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const VarTablePtr& vars, const FieldDescriptor& field, std::string_view text,
                     const std::map<std::string, MultiPoly>& abbreviations) {
  return PolyParser(vars, field, text, abbreviations).parse();
}

// ---------------------------------------------------------------------------

CompiledPoly::CompiledPoly(const MultiPoly& poly) : modulus_(poly.field().modulus()) {
  if (!poly.field().is_prime()) throw UsageError("CompiledPoly needs a prime-field polynomial");
  for (const auto& [e, c] : poly.terms()) {
    Term t{c.residue(), static_cast<std::uint32_t>(factors_.size()), 0};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) {
        factors_.push_back({static_cast<std::uint32_t>(i), e[i]});
        ++t.factor_count;
      }
    }
    terms_.push_back(t);
  }
}

std::uint32_t CompiledPoly::evaluate(std::span<const std::uint32_t> residues) const noexcept {
  const std::uint64_t p = modulus_;
  std::uint64_t sum = 0;
  for (const Term& t : terms_) {
    std::uint64_t prod = t.coefficient;
    for (std::uint32_t f = t.first_factor; f < t.first_factor + t.factor_count; ++f) {
      const std::uint64_t x = residues[factors_[f].var];
      for (std::uint32_t k = 0; k < factors_[f].exponent; ++k) prod = prod * x % p;
    }
    sum += prod;
    if (sum >= p) sum -= p;
  }
  return static_cast<std::uint32_t>(sum);
}

}  // namespace lieorbit
