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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folia/forms.hpp"
#include "folia/groebner.hpp"

namespace folia {

/// Tangent sheaf O(a) + O(b) with a <= b.
struct SplittingType {
  int a;
  int b;
  bool operator==(const SplittingType&) const = default;
};

struct ClassificationReport {
  int degree = 0;
  bool integrable = false;
  bool codim_ok = false;
  bool saturated = false;
  bool is_curve = false;
  bool is_acm = false;
  bool is_split = false;
  std::optional<SplittingType> splitting_type;
  /// Nonzero graded pieces of the Hartshorne-Rao module (empty when not a curve or ACM).
  std::map<int, Integer> rao_dims;
  /// Graded Betti numbers of R / I^sat.
  std::vector<std::map<int, int>> betti;
  /// d + 2, the twist of the normal sheaf.
  int normal_twist = 0;
  /// Connectedness of the singular scheme is not decided.
  std::string connected = "not computed";
};

// Ideal-level tests. `ideal` need not be saturated unless stated.

/// ideal_equal(I, saturate(I)).
bool is_saturated(const Ideal& ideal, const Limits& limits = default_limits());
/// R/I^sat has Krull dimension 2 and Ext^{n}(R/I^sat, R) has finite length (n + 1 variables).
bool is_curve(const Ideal& ideal, const Limits& limits = default_limits());
/// The minimal resolution of R/I^sat has length exactly 2.
bool is_acm(const Ideal& ideal, const Limits& limits = default_limits());
/// Rao module dimensions: t -> dim Ext^{n}(R/I^sat, R)_{-t-n-1}; requires a curve.
std::map<int, Integer> rao_dimensions(const Ideal& ideal, const Limits& limits = default_limits());

// Form-level tests on the singular ideal (F_0..F_n).

bool is_saturated(const ProjectiveOneForm& omega, const Limits& limits = default_limits());
bool is_curve(const ProjectiveOneForm& omega, const Limits& limits = default_limits());
inline bool is_locally_free(const ProjectiveOneForm& omega, const Limits& limits = default_limits()) {
  return is_curve(omega, limits);
}
bool is_acm(const ProjectiveOneForm& omega, const Limits& limits = default_limits());
/// Computes (curve and saturated) and (curve and ACM); throws InternalInconsistency
/// when the two disagree.
bool is_split(const ProjectiveOneForm& omega, const Limits& limits = default_limits());

/// Dimension of {(g_0..g_n) : deg g_i = m + 1, sum g_i F_i = 0}.
Integer syzygy_piece_dimension(const ProjectiveOneForm& omega, int m,
                               const Limits& limits = default_limits());
/// Recovers (a, b) from syzygy dimensions; requires a split P^3 form. Throws
/// ConsistencyFailure when the dimensions do not fit O(a) + O(b).
SplittingType splitting_type(const ProjectiveOneForm& omega, const Limits& limits = default_limits());
std::map<int, Integer> rao_dimensions(const ProjectiveOneForm& omega,
                                      const Limits& limits = default_limits());

/// Full report for a P^3 form; throws instead of returning partial data.
ClassificationReport classify(const ProjectiveOneForm& omega, const Limits& limits = default_limits());

}  // namespace folia
