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

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "folia/error.hpp"

namespace folia {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxVars = 12;

enum class OrderKind {
  grevlex,
  lex,
  /// Graded reverse lexicographic with one chosen variable ranked last.
  grevlex_cheapest,
};

/// Q[z0, ..., z_{n-1}] together with a monomial order. Two rings are the
/// same ring only if variable count, order and cheapest variable all match.
class PolyRing {
 public:
  explicit PolyRing(int num_vars, OrderKind order = OrderKind::grevlex, int cheapest = -1);

  int num_vars() const noexcept { return num_vars_; }
  OrderKind order() const noexcept { return order_; }
  int cheapest() const noexcept { return cheapest_; }
  bool graded() const noexcept { return order_ != OrderKind::lex; }

  PolyRing with_order(OrderKind order, int cheapest = -1) const {
    return PolyRing(num_vars_, order, cheapest);
  }

  std::string var_name(int i) const { return "z" + std::to_string(i); }

  bool operator==(const PolyRing&) const = default;

 private:
  int num_vars_;
  OrderKind order_;
  int cheapest_;
};

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int i, int power = 1);
  static Monomial from_exponents(std::span<const int> exps);

  int degree() const noexcept { return degree_; }
  int operator[](int i) const noexcept { return exps_[static_cast<std::size_t>(i)]; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Bit i is set when variable i occurs; a cheap divisibility pre-filter.
  std::uint32_t support_mask() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  void set(int i, int e);

  bool operator==(const Monomial& other) const noexcept {
    return degree_ == other.degree_ && exps_ == other.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

/// Three-way comparison of monomials in the ring's order: -1, 0 or 1.
int compare_monomials(const PolyRing& ring, const Monomial& a, const Monomial& b) noexcept;

struct Term {
  Monomial mono;
  Rational coef;
};

/// Square matrix of rationals used for linear substitutions.
using RationalSquare = std::vector<std::vector<Rational>>;

/// Sparse polynomial with exact rational coefficients. Terms are kept
/// strictly descending in the ring order with no zero coefficients, so the
/// representation is canonical and the leading term is the first one.
class Polynomial {
 public:
  explicit Polynomial(PolyRing ring) : ring_(ring) {}

  static Polynomial constant(PolyRing ring, const Rational& c);
  static Polynomial variable(PolyRing ring, int i);
  static Polynomial monomial(PolyRing ring, const Monomial& m, const Rational& c = 1);
  /// Builds a polynomial from arbitrary terms: sorts, merges, drops zeros.
  static Polynomial from_terms(PolyRing ring, std::vector<Term> terms);

  const PolyRing& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  const Term& leading() const;

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial pow(int e) const;

  /// this + c * m * g, in one merge pass.
  Polynomial add_scaled(const Polynomial& g, const Rational& c, const Monomial& m) const;
  Polynomial mul_monomial(const Monomial& m, const Rational& c = 1) const;

  Polynomial derivative(int var) const;
  /// Pads every term with powers of `var` up to `target_degree`.
  Polynomial homogenize(int var, int target_degree) const;
  /// Sets `var` to 1.
  Polynomial dehomogenize(int var) const;
  /// Substitutes z_i <- sum_j A[i][j] z_j, i.e. returns p(A z).
  Polynomial substitute_linear(const RationalSquare& a) const;
  /// Substitutes z_i <- values[i] for every variable (values may be any polynomials
  /// of a common target ring).
  Polynomial substitute(std::span<const Polynomial> values) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Reorders the terms for a ring with the same variables but another order.
  Polynomial change_ring(const PolyRing& target) const;
  /// Renames variable i to var_map[i] inside `target`.
  Polynomial embed(const PolyRing& target, std::span<const int> var_map) const;
  /// Largest monomial dividing every term (1 for zero).
  Monomial content_monomial() const;
  Polynomial divide_monomial(const Monomial& m) const;
  Polynomial monic() const;
  /// True when `var` does not occur.
  bool free_of(int var) const noexcept;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_ring(const Polynomial& other) const;

  PolyRing ring_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Every monomial of the given total degree, descending in the ring order.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int degree);

/// Number of monomials of degree d in n variables (0 for d < 0).
long long count_monomials(int num_vars, int degree);

std::string rational_to_string(const Rational& q);

}  // namespace folia
