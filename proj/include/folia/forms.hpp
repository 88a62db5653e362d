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

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <vector>

#include "folia/groebner.hpp"
#include "folia/poly.hpp"

namespace folia {

/// Alternating K-form with polynomial coefficients, stored on strictly
/// increasing index tuples. get() accepts any tuple and applies the sign of
/// the sorting permutation.
template <int K>
class AlternatingForm {
 public:
  using Index = std::array<int, K>;

  explicit AlternatingForm(PolyRing ring) : ring_(ring) {
    Index idx{};
    enumerate(idx, 0, 0);
  }

  const PolyRing& ring() const noexcept { return ring_; }
  const std::map<Index, Polynomial>& components() const noexcept { return coeffs_; }

  Polynomial get(Index idx) const {
    int sign = 1;
    for (int a = 0; a < K; ++a) {
      for (int b = 0; b + 1 < K - a; ++b) {
        if (idx[b] > idx[b + 1]) {
          std::swap(idx[b], idx[b + 1]);
          sign = -sign;
        }
      }
    }
    for (int b = 0; b + 1 < K; ++b) {
      if (idx[b] == idx[b + 1]) return Polynomial(ring_);
    }
    const Polynomial& p = coeffs_.at(idx);
    return sign > 0 ? p : -p;
  }

  /// `idx` must be strictly increasing.
  void set(const Index& idx, Polynomial p) {
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) throw Error(ErrorCode::IndexOutOfRange, "form index not increasing");
    it->second = std::move(p);
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& kv) { return kv.second.is_zero(); });
  }

  bool operator==(const AlternatingForm& other) const {
    return ring_ == other.ring_ && coeffs_ == other.coeffs_;
  }

 private:
  void enumerate(Index& idx, int pos, int start) {
    if (pos == K) {
      coeffs_.emplace(idx, Polynomial(ring_));
      return;
    }
    for (int i = start; i < ring_.num_vars(); ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      enumerate(idx, pos + 1, i + 1);
    }
  }

  PolyRing ring_;
  std::map<Index, Polynomial> coeffs_;
};

using TwoForm = AlternatingForm<2>;
using ThreeForm = AlternatingForm<3>;

/// omega = sum F_j dz_j on P^n with homogeneous F_j of degree d+1 and
/// sum z_j F_j = 0. Only validate() creates one, so every instance has
/// passed the checks and carries no common monomial factor.
class ProjectiveOneForm {
 public:
  /// Checks zero form, homogeneity, equal degrees and the Euler relation,
  /// after stripping the common monomial factor of the coefficients.
  static ProjectiveOneForm validate(std::vector<Polynomial> coefficients);

  const PolyRing& ring() const noexcept { return coefficients_.front().ring(); }
  int num_vars() const noexcept { return static_cast<int>(coefficients_.size()); }
  const std::vector<Polynomial>& coefficients() const noexcept { return coefficients_; }
  const Polynomial& operator[](int i) const { return coefficients_[static_cast<std::size_t>(i)]; }
  /// d = deg F_j - 1.
  int degree() const noexcept { return degree_; }

  bool operator==(const ProjectiveOneForm& other) const { return coefficients_ == other.coefficients_; }

 private:
  ProjectiveOneForm(std::vector<Polynomial> c, int d) : coefficients_(std::move(c)), degree_(d) {}
  std::vector<Polynomial> coefficients_;
  int degree_;
};

/// Chart representative sum a_j dx_j with arbitrary (not necessarily
/// homogeneous) coefficients, one per affine variable.
struct AffineOneForm {
  PolyRing ring;
  std::vector<Polynomial> coefficients;

  AffineOneForm(PolyRing r, std::vector<Polynomial> c);
};

/// df for a polynomial f.
AffineOneForm exact_differential(const Polynomial& f);

/// (d omega)_{ij} = d_i F_j - d_j F_i.
TwoForm exterior_derivative(std::span<const Polynomial> coefficients);
TwoForm exterior_derivative(const ProjectiveOneForm& omega);
TwoForm exterior_derivative(const AffineOneForm& omega);
/// (d eta)_{ijk} = d_i eta_{jk} - d_j eta_{ik} + d_k eta_{ij}.
ThreeForm exterior_derivative(const TwoForm& eta);

/// (omega ^ eta)_{ijk} = F_i eta_{jk} - F_j eta_{ik} + F_k eta_{ij}.
ThreeForm wedge(std::span<const Polynomial> omega, const TwoForm& eta);

/// omega ^ d omega == 0, for any coefficient tuple (distributions included).
bool integrability_check(std::span<const Polynomial> coefficients);
bool integrability_check(const ProjectiveOneForm& omega);

/// (i_R eta)_j = sum_i z_i eta_{ij}.
std::vector<Polynomial> radial_contraction(const TwoForm& eta);

/// Krull dimension of R/(F_0..F_n).
int singular_dimension(const ProjectiveOneForm& omega);
/// The ideal (F_0..F_n); throws CodimTooSmall when its zero set has codimension one.
Ideal singular_ideal(const ProjectiveOneForm& omega);

/// Homogenizes with z_{new_var} (inserted at that index) and builds the
/// projective extension F_j = z_new A_j, F_new = -sum z_j A_j.
ProjectiveOneForm projectivize(const AffineOneForm& omega, int new_var);

/// sum_i lambda_i (prod_{j != i} f_i) df_i for homogeneous factors with
/// sum lambda_i deg f_i = 0.
ProjectiveOneForm logarithmic_form(const std::vector<Polynomial>& factors,
                                   const std::vector<Rational>& weights);

/// P^3 form 0 dz_0 + G_1 dz_1 + G_2 dz_2 + G_3 dz_3 from a plane form (G_1, G_2, G_3)
/// written in z0..z2, i.e. the pull-back by the projection from (1:0:0:0).
ProjectiveOneForm pullback_from_plane(const ProjectiveOneForm& plane);

/// A^T F(A z): the pull-back of omega by z -> A z.
ProjectiveOneForm apply_projectivity(const ProjectiveOneForm& omega, const RationalSquare& a);

struct ExceptionalForm {
  /// The parameter d used in the affine coefficients.
  int parameter;
  AffineOneForm affine;
  ProjectiveOneForm form;
  /// Degree of the projectivized form.
  int computed_degree;
  /// True when computed_degree differs from the parameter.
  bool degree_differs;
};

/// Projective extension of the affine form
///   (1+d)(x2 - x3^(d+1)) dx1 - (1+d+d^2)(x1 - x2^d x3) dx2
///     - (1+2d+2d^2+d^3)(x2^(d+1) - x1 x3^d) dx3
/// in the chart z0 = 1 (x_i = z_i). Integrability is checked.
ExceptionalForm exceptional_form(int d);

/// The linear vector fields accompanying the exceptional form: the diagonal
/// field S and the quasi-homogeneous field X, as coefficient vectors in x1..x3.
std::vector<Polynomial> exceptional_field_s(int d);
std::vector<Polynomial> exceptional_field_x(int d);

}  // namespace folia
