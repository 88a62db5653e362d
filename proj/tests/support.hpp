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

// Shared helpers and independent oracles for the unit tests. The oracles
// only use Polynomial arithmetic and dense linear algebra, never the
// Gröbner engine.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "folia/linalg.hpp"
#include "folia/poly.hpp"

namespace folia::testing {

std::uint64_t test_seed();

inline Polynomial var(const PolyRing& r, int i) { return Polynomial::variable(r, i); }
inline Polynomial cst(const PolyRing& r, const Rational& c) { return Polynomial::constant(r, c); }

/// Random homogeneous polynomial of degree d with small integer coefficients.
inline Polynomial random_form(const PolyRing& ring, int d, std::mt19937_64& rng, int max_terms = 4) {
  auto monos = monomials_of_degree(ring, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Term> terms;
  for (int k = 0; k < max_terms; ++k) {
    int c = coef(rng);
    if (c != 0) terms.push_back({monos[pick(rng)], c});
  }
  auto p = Polynomial::from_terms(ring, std::move(terms));
  if (p.is_zero()) p = Polynomial::monomial(ring, monos[pick(rng)]);
  return p;
}

/// Coefficient vectors of polynomials in the monomial basis of degree d.
inline Matrix coefficient_matrix(const PolyRing& ring, const std::vector<Polynomial>& ps, int d) {
  auto monos = monomials_of_degree(ring, d);
  Matrix m(ps.size(), monos.size());
  for (std::size_t r = 0; r < ps.size(); ++r) {
    for (std::size_t c = 0; c < monos.size(); ++c) m(r, c) = ps[r].coefficient(monos[c]);
  }
  return m;
}

/// Spanning set of the degree-d piece of the ideal generated by `gens`.
inline std::vector<Polynomial> degree_piece(const PolyRing& ring, const std::vector<Polynomial>& gens,
                                            int d) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(ring, d - g.degree())) out.push_back(g.mul_monomial(m));
  }
  return out;
}

/// dim_Q (R/I)_d by linear algebra.
inline long quotient_dimension(const PolyRing& ring, const std::vector<Polynomial>& gens, int d) {
  long total = count_monomials(ring.num_vars(), d);
  auto piece = degree_piece(ring, gens, d);
  if (piece.empty()) return total;
  return total - static_cast<long>(coefficient_matrix(ring, piece, d).rank());
}

/// True when homogeneous f lies in the ideal generated by `gens` (linear algebra in deg f).
inline bool in_ideal_by_linear_algebra(const PolyRing& ring, const std::vector<Polynomial>& gens,
                                       const Polynomial& f) {
  if (f.is_zero()) return true;
  auto piece = degree_piece(ring, gens, f.degree());
  if (piece.empty()) return false;
  auto base = coefficient_matrix(ring, piece, f.degree()).rank();
  piece.push_back(f);
  return coefficient_matrix(ring, piece, f.degree()).rank() == base;
}

/// Textbook multivariate division, leading term by leading term.
inline Polynomial naive_remainder(Polynomial f, const std::vector<Polynomial>& divisors) {
  Polynomial rem(f.ring());
  while (!f.is_zero()) {
    const Term lt = f.leading();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading().mono.divides(lt.mono)) {
        f = f - g.mul_monomial(lt.mono / g.leading().mono, lt.coef / g.leading().coef);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem += Polynomial::monomial(f.ring(), lt.mono, lt.coef);
      f = f - Polynomial::monomial(f.ring(), lt.mono, lt.coef);
    }
  }
  return rem;
}

/// Buchberger's criterion checked by naive S-polynomial reduction.
inline bool passes_s_pair_check(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      const Monomial l = f.leading().mono.lcm(g.leading().mono);
      Polynomial s = f.mul_monomial(l / f.leading().mono, 1 / f.leading().coef) -
                     g.mul_monomial(l / g.leading().mono, 1 / g.leading().coef);
      if (!naive_remainder(s, basis).is_zero()) return false;
    }
  }
  return true;
}

/// Number of degree-d monomials divisible by none of `gens`.
inline long standard_monomial_count(const PolyRing& ring, const std::vector<Monomial>& gens, int d) {
  long n = 0;
  for (const auto& m : monomials_of_degree(ring, d)) {
    bool hit = false;
    for (const auto& g : gens) hit = hit || g.divides(m);
    if (!hit) ++n;
  }
  return n;
}

}  // namespace folia::testing
