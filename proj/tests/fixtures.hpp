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

// Named P^3 forms shared by the classification, determination and
// acceptance tests.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "folia/determine.hpp"
#include "folia/forms.hpp"
#include "folia/linalg.hpp"
#include "support.hpp"

namespace folia::testing {

inline const PolyRing& p3() {
  static const PolyRing r(4);
  return r;
}
inline const PolyRing& p2() {
  static const PolyRing r(3);
  return r;
}
inline Polynomial z(int i) { return var(p3(), i); }
inline Polynomial w(int i) { return var(p2(), i); }

inline ProjectiveOneForm pencil() {
  return ProjectiveOneForm::validate({z(1), -z(0), Polynomial(p3()), Polynomial(p3())});
}

inline ProjectiveOneForm l1111(std::vector<Rational> lambda) {
  return logarithmic_form({z(0), z(1), z(2), z(3)}, lambda);
}

inline ProjectiveOneForm l112() {
  return logarithmic_form({z(2), z(3), z(0) * z(1) + z(2) * z(2) + z(3) * z(3)}, {1, 1, -1});
}

/// 2 g df - f dg for a plane f and a quadric g.
inline ProjectiveOneForm r12() {
  return logarithmic_form({z(0), z(1) * z(2) + z(3) * z(3) + z(0) * z(3)}, {2, -1});
}

/// g dq - q dg for two quadrics.
inline ProjectiveOneForm r22() {
  return logarithmic_form({z(0) * z(1) - z(2) * z(3), z(0) * z(2) + z(1) * z(3) + z(2) * z(2)}, {1, -1});
}

/// Plane logarithmic forms of degree 1, 2, 3 (three, four and five lines).
inline ProjectiveOneForm plane_log(int d) {
  std::vector<Polynomial> lines{w(0), w(1), w(2), w(0) + w(1) + w(2), w(0) - w(1) + 2 * w(2)};
  std::vector<Rational> weights;
  lines.erase(lines.begin() + d + 2, lines.end());
  for (int i = 0; i + 1 < d + 2; ++i) weights.push_back(1);
  weights.push_back(-(d + 1));
  return logarithmic_form(lines, weights);
}

/// i_R i_X i_Y of the volume form: F_j = det [R; X; Y; e_j].
inline ProjectiveOneForm field_pair_form(const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) {
  std::vector<Polynomial> rad{z(0), z(1), z(2), z(3)};
  auto det3 = [](const std::vector<std::vector<Polynomial>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  // Expanded along the last row.
  std::vector<Polynomial> f;
  for (int j = 0; j < 4; ++j) {
    std::vector<std::vector<Polynomial>> minor(3);
    for (int c = 0; c < 4; ++c) {
      if (c == j) continue;
      minor[0].push_back(rad[static_cast<std::size_t>(c)]);
      minor[1].push_back(x[static_cast<std::size_t>(c)]);
      minor[2].push_back(y[static_cast<std::size_t>(c)]);
    }
    Polynomial m = det3(minor);
    f.push_back((3 + j) % 2 == 0 ? m : -m);
  }
  return ProjectiveOneForm::validate(f);
}

/// Commuting quadratic fields X = P1 d/dz1 + P3 d/dz3 (P in z0, z1) and
/// Y = Q2 d/dz2 + Q3 d/dz3 (Q in z0, z2); degree 4.
inline ProjectiveOneForm abelian_form() {
  Polynomial zero(p3());
  return field_pair_form({zero, z(0) * z(0) + z(1) * z(1), zero, z(0) * z(1)},
                         {zero, zero, z(2) * z(2) - z(0) * z(0), z(0) * z(2) + 2 * z(2) * z(2)});
}

/// Degree 2 form of the affine Lie algebra acting on binary cubics
/// a0 x^3 + a1 x^2 y + a2 x y^2 + a3 y^3: X = diag(3, 1, -1, -3) and the
/// nilpotent Y = y d/dx, with [X, Y] = 2Y.
inline ProjectiveOneForm affine_lie_form() {
  Polynomial zero(p3());
  return field_pair_form({3 * z(0), z(1), -z(2), -3 * z(3)}, {zero, 3 * z(0), 2 * z(1), z(2)});
}

struct NamedForm {
  std::string name;
  ProjectiveOneForm form;
};

/// The classification corpus: degrees 0 through 3, split and non-split.
inline std::vector<NamedForm> corpus() {
  std::vector<NamedForm> out{
      {"pencil", pencil()},
      {"pencil_planes", logarithmic_form({z(0) + z(1), z(2) - z(3)}, {1, -1})},
      {"r12", r12()},
      {"l111", logarithmic_form({z(0), z(1), z(2)}, {1, 1, -2})},
      {"pullback_d1", pullback_from_plane(plane_log(1))},
      {"pullback_d2", pullback_from_plane(plane_log(2))},
      {"pullback_d3", pullback_from_plane(plane_log(3))},
      {"l1111", l1111({1, 1, 1, -3})},
      {"l1111_alt", l1111({1, -1, 1, -1})},
      {"l1111_general", logarithmic_form({z(0), z(1), z(2), z(0) + z(1) + z(2) + z(3)}, {1, 2, 3, -6})},
      {"l112", l112()},
      {"r22", r22()},
      {"l11111", logarithmic_form({z(0), z(1), z(2), z(3), z(0) + z(1) + z(2) + z(3)}, {1, 1, 1, 1, -4})},
      {"exceptional_2", exceptional_form(2).form},
      {"affine_lie", affine_lie_form()},
  };
  return out;
}

inline RationalSquare random_gl(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    RationalSquare a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& row : a) {
      for (auto& x : row) x = d(rng);
    }
    if (Matrix::from_rows(a).determinant() != 0) return a;
  }
}

/// Re-inserts the ignored coordinate with a zero coefficient.
inline ProjectiveOneForm lift_plane(const PullbackStructure& s) {
  std::vector<int> map;
  for (int i = 0; i < 3; ++i) map.push_back(i < s.ignored ? i : i + 1);
  std::vector<Polynomial> f;
  int k = 0;
  for (int i = 0; i < 4; ++i) f.push_back(i == s.ignored ? Polynomial(p3()) : s.plane[k++].embed(p3(), map));
  return ProjectiveOneForm::validate(f);
}

}  // namespace folia::testing
