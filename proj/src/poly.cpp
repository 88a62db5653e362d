// Copyright 2026 The Folia Authors
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

#include "folia/poly.hpp"

#include <algorithm>
#include <sstream>

namespace folia {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::Inhomogeneous: return "Inhomogeneous";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::CodimTooSmall: return "CodimTooSmall";
    case ErrorCode::WeightConstraintViolation: return "WeightConstraintViolation";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NoConstantSyzygy: return "NoConstantSyzygy";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

PolyRing::PolyRing(int num_vars, OrderKind order, int cheapest)
    : num_vars_(num_vars), order_(order), cheapest_(cheapest) {
  if (num_vars < 1 || num_vars > kMaxVars) {
    throw Error(ErrorCode::IndexOutOfRange,
                "number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
  }
  if (order == OrderKind::grevlex_cheapest) {
    if (cheapest < 0 || cheapest >= num_vars) {
      throw Error(ErrorCode::IndexOutOfRange, "cheapest variable out of range");
    }
  } else {
    cheapest_ = -1;
  }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= kMaxVars || e < 0 || e > 0xffff) {
    throw Error(ErrorCode::IndexOutOfRange, "monomial exponent out of range");
  }
  auto& slot = exps_[static_cast<std::size_t>(i)];
  degree_ = static_cast<std::uint16_t>(degree_ - slot + e);
  slot = static_cast<std::uint16_t>(e);
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps_[static_cast<std::size_t>(i)] != 0) mask |= (1u << i);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  int deg = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  int deg = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  return (support_mask() & other.support_mask()) == 0;
}

int compare_monomials(const PolyRing& ring, const Monomial& a, const Monomial& b) noexcept {
  const int n = ring.num_vars();
  switch (ring.order()) {
    case OrderKind::lex:
      for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::grevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::grevlex_cheapest: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      const int c = ring.cheapest();
      if (a[c] != b[c]) return a[c] < b[c] ? 1 : -1;
      for (int i = n - 1; i >= 0; --i) {
        if (i == c) continue;
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool descending(const PolyRing& ring, const Term& a, const Term& b) {
  return compare_monomials(ring, a.mono, b.mono) > 0;
}

}  // namespace

Polynomial Polynomial::constant(PolyRing ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(PolyRing ring, int i) {
  if (i < 0 || i >= ring.num_vars()) throw Error(ErrorCode::IndexOutOfRange, "variable index");
  return monomial(ring, Monomial::variable(i), 1);
}

Polynomial Polynomial::monomial(PolyRing ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(PolyRing ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return descending(ring, a, b); });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::Precondition, "leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coef;
  }
  return 0;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) {
    throw Error(ErrorCode::RingMismatch, "operands live in different polynomial rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::add_scaled(const Polynomial& g, const Rational& c, const Monomial& m) const {
  check_ring(g);
  Polynomial r(ring_);
  if (c == 0 || g.is_zero()) return *this;
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = g.terms_[j].mono * m;
    int cmp = i == terms_.size() ? -1 : compare_monomials(ring_, terms_[i].mono, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({gm, c * g.terms_[j].coef});
      ++j;
    } else {
      Rational s = terms_[i].coef + c * g.terms_[j].coef;
      if (s != 0) r.terms_.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  return add_scaled(other, 1, Monomial());
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return add_scaled(other, -1, Monomial());
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return *this = *this + other; }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this = *this - other; }

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) acc.push_back({a.mono * b.mono, a.coef * b.coef});
  }
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::operator*(const Rational& c) const { return mul_monomial(Monomial(), c); }

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::Precondition, "negative exponent");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_.num_vars()) {
    throw Error(ErrorCode::IndexOutOfRange, "derivative variable index out of range");
  }
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    acc.push_back({m, t.coef * e});
  }
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::homogenize(int var, int target_degree) const {
  if (var < 0 || var >= ring_.num_vars()) {
    throw Error(ErrorCode::IndexOutOfRange, "homogenizing variable index out of range");
  }
  if (!free_of(var)) {
    throw Error(ErrorCode::Precondition, "homogenizing variable already occurs");
  }
  if (target_degree < degree()) {
    throw Error(ErrorCode::DegreeTooSmall, "target degree " + std::to_string(target_degree) +
                                               " below polynomial degree " +
                                               std::to_string(degree()));
  }
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    m.set(var, target_degree - t.mono.degree());
    acc.push_back({m, t.coef});
  }
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::dehomogenize(int var) const {
  if (var < 0 || var >= ring_.num_vars()) {
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  }
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    m.set(var, 0);
    acc.push_back({m, t.coef});
  }
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (static_cast<int>(values.size()) != ring_.num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "substitution needs one value per variable");
  }
  const PolyRing& target = values.front().ring();
  // Cache powers per variable; degrees here stay small.
  std::vector<std::vector<Polynomial>> powers(values.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coef);
    for (int i = 0; i < ring_.num_vars(); ++i) {
      if (t.mono[i] > 0) prod = prod * power(static_cast<std::size_t>(i), t.mono[i]);
    }
    result += prod;
  }
  return result;
}

Polynomial Polynomial::substitute_linear(const RationalSquare& a) const {
  const int n = ring_.num_vars();
  if (static_cast<int>(a.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "substitution matrix has wrong size");
  }
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != n) {
      throw Error(ErrorCode::DimensionMismatch, "substitution matrix is not square");
    }
    std::vector<Term> acc;
    for (int j = 0; j < n; ++j) {
      acc.push_back({Monomial::variable(j), a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    }
    images.push_back(from_terms(ring_, std::move(acc)));
  }
  return substitute(images);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != ring_.num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong size");
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int i = 0; i < ring_.num_vars(); ++i) {
      for (int e = 0; e < t.mono[i]; ++e) v *= point[static_cast<std::size_t>(i)];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::change_ring(const PolyRing& target) const {
  if (target.num_vars() != ring_.num_vars()) {
    throw Error(ErrorCode::RingMismatch, "change_ring needs the same number of variables");
  }
  return from_terms(target, terms_);
}

Polynomial Polynomial::embed(const PolyRing& target, std::span<const int> var_map) const {
  if (static_cast<int>(var_map.size()) != ring_.num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "variable map has wrong size");
  }
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_.num_vars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      int j = var_map[static_cast<std::size_t>(i)];
      if (j < 0 || j >= target.num_vars()) {
        throw Error(ErrorCode::IndexOutOfRange, "variable map points outside target ring");
      }
      m.set(j, m[j] + e);
    }
    acc.push_back({m, t.coef});
  }
  return from_terms(target, std::move(acc));
}

Monomial Polynomial::content_monomial() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = g.gcd(t.mono);
  return g;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw Error(ErrorCode::Precondition, "monomial does not divide");
    r.terms_.push_back({t.mono / m, t.coef});
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coef;
  return *this * inv;
}

bool Polynomial::free_of(int var) const noexcept {
  for (const auto& t : terms_) {
    if (t.mono[var] != 0) return false;
  }
  return true;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!(ring_ == other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coef != other.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < ring_.num_vars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.var_name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out << rational_to_string(c);
    } else if (c == 1) {
      out << mono;
    } else {
      out << rational_to_string(c) << "*" << mono;
    }
  }
  return out.str();
}

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const int n = ring.num_vars();
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  // Enumerate compositions of `degree` into n parts.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      exps[static_cast<std::size_t>(var)] = remaining;
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare_monomials(ring, a, b) > 0;
  });
  return out;
}

long long count_monomials(int num_vars, int degree) {
  if (degree < 0) return 0;
  // C(degree + n - 1, n - 1)
  long long r = 1;
  for (int i = 1; i < num_vars; ++i) r = r * (degree + i) / i;
  return r;
}

}  // namespace folia
