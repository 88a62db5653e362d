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

#include <optional>
#include <string>
#include <vector>

#include "folia/classify.hpp"
#include "folia/forms.hpp"
#include "folia/groebner.hpp"
#include "folia/linalg.hpp"

namespace folia {

/// (l_0..l_n) of linear forms with sum l_i F_i = 0.
struct LinearSyzygy {
  std::vector<Polynomial> entries;
  bool operator==(const LinearSyzygy&) const = default;
};

/// Basis of the linear syzygies of (F_0..F_n): the Euler syzygy first, the
/// remaining vectors taken in reduced row echelon order.
std::vector<LinearSyzygy> linear_syzygy_space(const ProjectiveOneForm& omega);
/// Basis of {a in Q^{n+1} : sum a_i F_i = 0}, in reduced row echelon form.
std::vector<std::vector<Rational>> constant_syzygy_space(const ProjectiveOneForm& omega);

/// M with (z_0..z_n) M = (l_0..l_n), i.e. M(i, j) is the z_i coefficient of l_j.
Matrix syzygy_to_matrix(const LinearSyzygy& s);
LinearSyzygy matrix_to_syzygy(const PolyRing& ring, const Matrix& m);

/// Coefficients M F. Throws SingularMatrix when det M = 0. The result may be
/// non-integrable; its singular ideal is checked against omega's.
ProjectiveOneForm distribution_from_matrix(const ProjectiveOneForm& omega, const Matrix& m);

/// sum_k alpha_k omega_k with omega_k = M_k F over the linear syzygy basis.
struct DistributionFamily {
  ProjectiveOneForm base;
  std::vector<LinearSyzygy> syzygy_basis;
  std::vector<Matrix> matrices;
  /// Coefficient tuples of omega_k = M_k F.
  std::vector<std::vector<Polynomial>> members;
  int parameter_dim;
  /// Ring of the parameters alpha_0..alpha_{k-1}.
  PolyRing parameter_ring;
  /// det(sum alpha_k M_k).
  Polynomial degenerate_locus;

  Matrix matrix_at(const std::vector<Rational>& alpha) const;
  std::vector<Polynomial> member_at(const std::vector<Rational>& alpha) const;
};

/// Requires a split P^3 foliation (Precondition otherwise) unless check_split is false.
DistributionFamily distribution_family(const ProjectiveOneForm& omega, bool check_split = true,
                                       const Limits& limits = default_limits());

/// Coefficients, in z, of (sum alpha_k omega_k) ^ d(sum alpha_j omega_j): quadrics in alpha.
std::vector<Polynomial> integrability_system(const DistributionFamily& family);

struct IntegrableMembers {
  enum class Kind { finite, positive_dimensional, inconclusive };
  Kind kind = Kind::inconclusive;
  /// Finite: every integrable parameter point up to scale. Positive
  /// dimensional: two witnesses, neither proportional to the base nor to each other.
  std::vector<std::vector<Rational>> points;
  /// Projective dimension of the integrable non-degenerate locus (-1 if unknown).
  int dimension = -1;
  std::string note;
};

struct MemberOptions {
  /// Largest parameter count attempted.
  int max_parameter_dim = 6;
  /// Largest |entry| of a scan direction.
  int scan_bound = 2;
};

IntegrableMembers integrable_members(const DistributionFamily& family, const Limits& limits = default_limits(),
                                     const MemberOptions& options = {});

struct Determination {
  enum class Kind { unique, non_unique, inconclusive };
  Kind kind = Kind::inconclusive;
  std::string reason;
  SplittingType splitting_type{0, 0};
  /// A second integrable form with the same saturated singular ideal.
  std::optional<ProjectiveOneForm> witness;
};

std::string kind_name(Determination::Kind k);
std::string kind_name(IntegrableMembers::Kind k);

/// Requires a split P^3 foliation.
Determination is_determined_by_singular_scheme(const ProjectiveOneForm& omega,
                                               const Limits& limits = default_limits(),
                                               const MemberOptions& options = {});

struct PullbackStructure {
  /// Plane form in the remaining three coordinates.
  ProjectiveOneForm plane;
  /// z = C z'.
  RationalSquare change;
  /// Coordinate of z' that the transformed form ignores.
  int ignored;
};

/// Uses a constant syzygy a: with p the first index where a_p != 0, C is the
/// identity with column p replaced by a. Returns nullopt, with `diagnostic`
/// filled, when the transformed coefficients still involve z'_p.
/// Throws NoConstantSyzygy when there is no constant syzygy.
std::optional<PullbackStructure> pullback_structure(const ProjectiveOneForm& omega,
                                                    std::string* diagnostic = nullptr);

}  // namespace folia
