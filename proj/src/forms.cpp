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

#include "folia/forms.hpp"

#include <utility>

namespace folia {

ProjectiveOneForm ProjectiveOneForm::validate(std::vector<Polynomial> coefficients) {
  if (coefficients.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "a 1-form needs at least two coefficients");
  }
  const PolyRing ring = coefficients.front().ring();
  if (ring.num_vars() != static_cast<int>(coefficients.size())) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient count differs from the number of variables");
  }
  int degree = -1;
  for (const auto& f : coefficients) {
    if (!(f.ring() == ring)) throw Error(ErrorCode::RingMismatch, "coefficients from different rings");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw Error(ErrorCode::Inhomogeneous, "coefficient " + f.to_string() + " is not homogeneous");
    if (degree >= 0 && f.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "coefficients have different degrees");
    }
    degree = f.degree();
  }
  if (degree < 0) throw Error(ErrorCode::ZeroForm, "all coefficients vanish");

  Polynomial euler(ring);
  for (int j = 0; j < ring.num_vars(); ++j) {
    euler += Polynomial::variable(ring, j) * coefficients[static_cast<std::size_t>(j)];
  }
  if (!euler.is_zero()) {
    throw Error(ErrorCode::EulerViolation, "sum z_j F_j = " + euler.to_string() + " is not zero");
  }

  bool first = true;
  Monomial common;
  for (const auto& f : coefficients) {
    if (f.is_zero()) continue;
    common = first ? f.content_monomial() : common.gcd(f.content_monomial());
    first = false;
  }
  if (!common.is_one()) {
    for (auto& f : coefficients) {
      if (!f.is_zero()) f = f.divide_monomial(common);
    }
    degree -= common.degree();
  }

  return ProjectiveOneForm(std::move(coefficients), degree - 1);
}

AffineOneForm::AffineOneForm(PolyRing r, std::vector<Polynomial> c)
    : ring(r), coefficients(std::move(c)) {
  if (static_cast<int>(coefficients.size()) != ring.num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "affine form needs one coefficient per variable");
  }
  for (const auto& f : coefficients) {
    if (!(f.ring() == ring)) throw Error(ErrorCode::RingMismatch, "coefficients from different rings");
  }
}

AffineOneForm exact_differential(const Polynomial& f) {
  std::vector<Polynomial> c;
  for (int i = 0; i < f.ring().num_vars(); ++i) c.push_back(f.derivative(i));
  return AffineOneForm(f.ring(), std::move(c));
}

TwoForm exterior_derivative(std::span<const Polynomial> f) {
  const PolyRing ring = f.front().ring();
  TwoForm out(ring);
  const int n = static_cast<int>(f.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.set({i, j}, f[static_cast<std::size_t>(j)].derivative(i) - f[static_cast<std::size_t>(i)].derivative(j));
    }
  }
  return out;
}

TwoForm exterior_derivative(const ProjectiveOneForm& omega) {
  return exterior_derivative(std::span<const Polynomial>(omega.coefficients()));
}

TwoForm exterior_derivative(const AffineOneForm& omega) {
  return exterior_derivative(std::span<const Polynomial>(omega.coefficients));
}

ThreeForm exterior_derivative(const TwoForm& eta) {
  ThreeForm out(eta.ring());
  for (const auto& [idx, _] : out.components()) {
    const auto [i, j, k] = idx;
    out.set(idx, eta.get({j, k}).derivative(i) - eta.get({i, k}).derivative(j) +
                     eta.get({i, j}).derivative(k));
  }
  return out;
}

ThreeForm wedge(std::span<const Polynomial> f, const TwoForm& eta) {
  ThreeForm out(eta.ring());
  for (const auto& [idx, _] : out.components()) {
    const auto [i, j, k] = idx;
    const auto& fi = f[static_cast<std::size_t>(i)];
    const auto& fj = f[static_cast<std::size_t>(j)];
    const auto& fk = f[static_cast<std::size_t>(k)];
    out.set(idx, fi * eta.get({j, k}) - fj * eta.get({i, k}) + fk * eta.get({i, j}));
  }
  return out;
}

bool integrability_check(std::span<const Polynomial> coefficients) {
  return wedge(coefficients, exterior_derivative(coefficients)).is_zero();
}

bool integrability_check(const ProjectiveOneForm& omega) {
  return integrability_check(std::span<const Polynomial>(omega.coefficients()));
}

std::vector<Polynomial> radial_contraction(const TwoForm& eta) {
  const PolyRing& ring = eta.ring();
  std::vector<Polynomial> out;
  for (int j = 0; j < ring.num_vars(); ++j) {
    Polynomial s(ring);
    for (int i = 0; i < ring.num_vars(); ++i) s += Polynomial::variable(ring, i) * eta.get({i, j});
    out.push_back(std::move(s));
  }
  return out;
}

int singular_dimension(const ProjectiveOneForm& omega) {
  return hilbert_data(Ideal(omega.ring(), omega.coefficients())).krull_dim;
}

Ideal singular_ideal(const ProjectiveOneForm& omega) {
  Ideal ideal(omega.ring(), omega.coefficients());
  if (hilbert_data(ideal).krull_dim >= omega.num_vars() - 1) {
    throw Error(ErrorCode::CodimTooSmall, "singular set has codimension one");
  }
  return ideal;
}

ProjectiveOneForm projectivize(const AffineOneForm& omega, int new_var) {
  const int n = omega.ring.num_vars();
  if (new_var < 0 || new_var > n) throw Error(ErrorCode::IndexOutOfRange, "homogenizing variable out of range");
  const PolyRing target(n + 1);
  std::vector<int> map;
  for (int i = 0; i < n; ++i) map.push_back(i < new_var ? i : i + 1);
  int top = -1;
  for (const auto& a : omega.coefficients) top = std::max(top, a.degree());
  if (top < 0) throw Error(ErrorCode::ZeroForm, "all coefficients vanish");

  const Polynomial zn = Polynomial::variable(target, new_var);
  std::vector<Polynomial> f(static_cast<std::size_t>(n + 1), Polynomial(target));
  Polynomial last(target);
  for (int i = 0; i < n; ++i) {
    const Polynomial h = omega.coefficients[static_cast<std::size_t>(i)].embed(target, map).homogenize(new_var, top);
    const int j = map[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(j)] = zn * h;
    last -= Polynomial::variable(target, j) * h;
  }
  f[static_cast<std::size_t>(new_var)] = last;
  return ProjectiveOneForm::validate(std::move(f));
}

ProjectiveOneForm logarithmic_form(const std::vector<Polynomial>& factors,
                                   const std::vector<Rational>& weights) {
  if (factors.size() != weights.size() || factors.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "need matching factor and weight lists");
  }
  const PolyRing ring = factors.front().ring();
  Rational weighted = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (!(f.ring() == ring)) throw Error(ErrorCode::RingMismatch, "factors from different rings");
    if (f.is_constant() || !f.is_homogeneous()) {
      throw Error(ErrorCode::Inhomogeneous, "factors must be nonconstant homogeneous forms");
    }
    if (weights[i] == 0) throw Error(ErrorCode::WeightConstraintViolation, "weights must be nonzero");
    weighted += weights[i] * f.degree();
  }
  if (weighted != 0) {
    throw Error(ErrorCode::WeightConstraintViolation,
                "sum of weight times degree is " + rational_to_string(weighted) + ", not 0");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (i == j) continue;
      std::vector<Polynomial> gi{factors[i].monic()};
      if (factors[j].degree() >= factors[i].degree() && normal_form(factors[j], gi).is_zero()) {
        throw Error(ErrorCode::Precondition, "factor " + factors[i].to_string() + " divides another factor");
      }
    }
  }
  std::vector<Polynomial> f(static_cast<std::size_t>(ring.num_vars()), Polynomial(ring));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Polynomial others = Polynomial::constant(ring, weights[i]);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j != i) others = others * factors[j];
    }
    for (int k = 0; k < ring.num_vars(); ++k) {
      f[static_cast<std::size_t>(k)] += others * factors[i].derivative(k);
    }
  }
  return ProjectiveOneForm::validate(std::move(f));
}

ProjectiveOneForm pullback_from_plane(const ProjectiveOneForm& plane) {
  if (plane.num_vars() != 3) throw Error(ErrorCode::DimensionMismatch, "expected a plane form");
  const PolyRing target(4);
  const std::vector<int> map{1, 2, 3};
  std::vector<Polynomial> f{Polynomial(target)};
  for (const auto& g : plane.coefficients()) f.push_back(g.embed(target, map));
  return ProjectiveOneForm::validate(std::move(f));
}

ProjectiveOneForm apply_projectivity(const ProjectiveOneForm& omega, const RationalSquare& a) {
  const auto n = static_cast<std::size_t>(omega.num_vars());
  if (a.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix size differs from the number of variables");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
  std::vector<Polynomial> moved;
  for (const auto& f : omega.coefficients()) moved.push_back(f.substitute_linear(a));
  std::vector<Polynomial> g(n, Polynomial(omega.ring()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k][i] != 0) g[i] += moved[k] * a[k][i];
    }
  }
  return ProjectiveOneForm::validate(std::move(g));
}

namespace {

PolyRing chart_ring() { return PolyRing(3); }

}  // namespace

std::vector<Polynomial> exceptional_field_s(int d) {
  const PolyRing r = chart_ring();
  return {Polynomial::variable(r, 0) * Rational(1 + d + d * d),
          Polynomial::variable(r, 1) * Rational(1 + d), Polynomial::variable(r, 2)};
}

std::vector<Polynomial> exceptional_field_x(int d) {
  const PolyRing r = chart_ring();
  return {Polynomial::variable(r, 1).pow(d) * Rational(1 + d + d * d),
          Polynomial::variable(r, 2).pow(d) * Rational(1 + d), Polynomial::constant(r, 1)};
}

ExceptionalForm exceptional_form(int d) {
  if (d < 2) throw Error(ErrorCode::Precondition, "exceptional family needs d >= 2");
  const PolyRing r = chart_ring();
  const auto x1 = Polynomial::variable(r, 0);
  const auto x2 = Polynomial::variable(r, 1);
  const auto x3 = Polynomial::variable(r, 2);
  const Rational c1 = 1 + d;
  const Rational c2 = 1 + d + d * d;
  const Rational c3 = 1 + 2 * d + 2 * d * d + d * d * d;
  AffineOneForm affine(r, {(x2 - x3.pow(d + 1)) * c1, -(x1 - x2.pow(d) * x3) * c2,
                           -(x2.pow(d + 1) - x1 * x3.pow(d)) * c3});
  ProjectiveOneForm form = projectivize(affine, 0);
  if (!integrability_check(form)) {
    throw Error(ErrorCode::ConsistencyFailure, "exceptional form is not integrable");
  }
  const int computed = form.degree();
  return ExceptionalForm{d, std::move(affine), std::move(form), computed, computed != d};
}

}  // namespace folia
