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

#include <random>

#include "doctest.h"
#include "folia/forms.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

PolyRing P3(4);
PolyRing P2(3);

Polynomial z(int i) { return var(P3, i); }

ProjectiveOneForm pencil() { return ProjectiveOneForm::validate({z(1), -z(0), Polynomial(P3), Polynomial(P3)}); }

ProjectiveOneForm l1111(std::vector<Rational> lambda) {
  return logarithmic_form({z(0), z(1), z(2), z(3)}, lambda);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

RationalSquare random_gl(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    RationalSquare a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& row : a) {
      for (auto& x : row) x = d(rng);
    }
    if (Matrix::from_rows(a).determinant() != 0) return a;
  }
}

}  // namespace

TEST_CASE("validation of coefficient tuples") {
  auto p = pencil();
  CHECK(p.degree() == 0);
  CHECK(code_of([] { (void)ProjectiveOneForm::validate({z(0), Polynomial(P3), Polynomial(P3), Polynomial(P3)}); }) ==
        ErrorCode::EulerViolation);
  try {
    (void)ProjectiveOneForm::validate({z(0), Polynomial(P3), Polynomial(P3), Polynomial(P3)});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("z0^2") != std::string::npos);
  }
  CHECK(code_of([] { (void)ProjectiveOneForm::validate(std::vector<Polynomial>(4, Polynomial(P3))); }) ==
        ErrorCode::ZeroForm);
  CHECK(code_of([] { (void)ProjectiveOneForm::validate({z(1) + z(1) * z(1), -z(0), Polynomial(P3), Polynomial(P3)}); }) ==
        ErrorCode::Inhomogeneous);
  CHECK(code_of([] { (void)ProjectiveOneForm::validate({z(1) * z(1), -z(0), Polynomial(P3), Polynomial(P3)}); }) ==
        ErrorCode::DegreeMismatch);
  // Common monomial factors are stripped.
  auto s = ProjectiveOneForm::validate({z(1) * z(2), -z(0) * z(2), Polynomial(P3), Polynomial(P3)});
  CHECK(s == pencil());
  // Explicit tetrahedral coefficients with weights summing to zero.
  auto t = ProjectiveOneForm::validate({z(1) * z(2) * z(3), z(0) * z(2) * z(3), z(0) * z(1) * z(3),
                                        z(0) * z(1) * z(2) * Rational(-3)});
  CHECK(t.degree() == 2);
  CHECK(t == l1111({1, 1, 1, -3}));
}

TEST_CASE("exterior derivative conventions") {
  auto dw = exterior_derivative(pencil());
  CHECK(dw.get({0, 1}) == cst(P3, -2));
  CHECK(dw.get({1, 0}) == cst(P3, 2));
  CHECK(dw.get({0, 0}).is_zero());
  CHECK(dw.get({2, 3}).is_zero());
  auto r = radial_contraction(dw);
  CHECK(r[0] == z(1) * Rational(2));
  CHECK(r[1] == z(0) * Rational(-2));
  CHECK(radial_contraction(TwoForm(P3)) == std::vector<Polynomial>(4, Polynomial(P3)));
  PolyRing a3(3);
  auto f = var(a3, 0) * var(a3, 1).pow(2) + var(a3, 2).pow(3) - var(a3, 1);
  CHECK(exterior_derivative(exact_differential(f)).is_zero());
}

TEST_CASE("property: d^2 = 0 on random affine forms") {
  std::mt19937_64 rng(test_seed() + 21);
  PolyRing a3(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> c;
    for (int k = 0; k < 3; ++k) c.push_back(random_form(a3, 2, rng) + random_form(a3, 1, rng) + cst(a3, k));
    AffineOneForm w(a3, c);
    CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
  }
}

TEST_CASE("wedge is alternating") {
  auto w = l1111({1, -1, 1, -1});
  auto three = wedge(w.coefficients(), exterior_derivative(logarithmic_form({z(0) + z(1), z(2), z(3), z(1)}, {1, 1, 1, -3})));
  for (const auto& [idx, p] : three.components()) {
    CHECK(three.get({idx[1], idx[0], idx[2]}) == -p);
    CHECK(three.get({idx[0], idx[2], idx[1]}) == -p);
    CHECK(three.get({idx[2], idx[0], idx[1]}) == p);
  }
}

TEST_CASE("integrability") {
  CHECK(integrability_check(pencil()));
  for (auto lambda : std::vector<std::vector<Rational>>{{1, 1, 1, -3}, {1, -1, 1, -1}, {2, 3, -1, -4}}) {
    CHECK(integrability_check(l1111(lambda)));
  }
  // A generic linear distribution is not integrable.
  std::vector<Polynomial> c{z(1) * z(2), -z(0) * z(2) + z(3) * z(3), Polynomial(P3), -z(1) * z(3)};
  Polynomial euler(P3);
  for (int j = 0; j < 4; ++j) euler += z(j) * c[static_cast<std::size_t>(j)];
  REQUIRE(euler.is_zero());
  CHECK_FALSE(integrability_check(c));
}

TEST_CASE("singular ideals") {
  CHECK(ideal_equal(singular_ideal(pencil()), Ideal(P3, {z(0), z(1)})));
  auto edges = Ideal(P3, {z(1) * z(2) * z(3), z(0) * z(2) * z(3), z(0) * z(1) * z(3), z(0) * z(1) * z(2)});
  CHECK(ideal_equal(singular_ideal(l1111({1, 1, 1, -3})), edges));
  auto h = hilbert_data(edges);
  CHECK(h.krull_dim == 2);
  CHECK(h.dimension(3) == 16);
  // A surviving common factor is rejected.
  auto q = z(0) + z(1);
  auto f = ProjectiveOneForm::validate({z(1) * q, -z(0) * q, Polynomial(P3), Polynomial(P3)});
  CHECK(code_of([&] { (void)singular_ideal(f); }) == ErrorCode::CodimTooSmall);
}

TEST_CASE("projectivization") {
  PolyRing a2(2);
  AffineOneForm w(a2, {var(a2, 1), -var(a2, 0)});
  auto p = projectivize(w, 2);
  CHECK(p == ProjectiveOneForm::validate({var(P2, 1), -var(P2, 0), Polynomial(P2)}));
  CHECK(p.degree() == 0);
  AffineOneForm dx(a2, {cst(a2, 1), Polynomial(a2)});
  auto q = projectivize(dx, 2);
  CHECK(q == ProjectiveOneForm::validate({var(P2, 2), Polynomial(P2), -var(P2, 0)}));
}

TEST_CASE("logarithmic constructor") {
  auto w = logarithmic_form({var(P2, 0), var(P2, 1), var(P2, 2)}, {1, 1, -2});
  CHECK(w.num_vars() == 3);
  CHECK(integrability_check(w));
  CHECK(code_of([] { (void)logarithmic_form({z(0), z(1)}, {1, 2}); }) == ErrorCode::WeightConstraintViolation);
  CHECK(code_of([] { (void)logarithmic_form({z(0), z(1)}, {0, 0}); }) == ErrorCode::WeightConstraintViolation);
  CHECK(code_of([] { (void)logarithmic_form({z(0), z(0) * z(1)}, {2, -1}); }) == ErrorCode::Precondition);
  auto quad = z(0) * z(1) + z(2) * z(2) + z(3) * z(3);
  auto l112 = logarithmic_form({z(2), z(3), quad}, {1, 1, -1});
  CHECK(l112.degree() == 2);
  CHECK(integrability_check(l112));
}

TEST_CASE("pull-back from the plane") {
  auto plane = ProjectiveOneForm::validate({var(P2, 1), -var(P2, 0), Polynomial(P2)});
  auto w = pullback_from_plane(plane);
  CHECK(w == ProjectiveOneForm::validate({Polynomial(P3), z(2), -z(1), Polynomial(P3)}));
  CHECK(w.degree() == 0);
  CHECK(w[0].is_zero());
}

TEST_CASE("exceptional form scalars and degree") {
  auto e2 = exceptional_form(2);
  const auto& a = e2.affine.coefficients;
  PolyRing r = e2.affine.ring;
  CHECK(a[0].coefficient(Monomial::variable(1)) == 3);
  CHECK(a[1].coefficient(Monomial::variable(0)) == -7);
  CHECK(a[2].coefficient(Monomial::variable(1, 3)) == -21);
  CHECK(integrability_check(e2.form));
  CHECK(e2.computed_degree == 3);
  CHECK(e2.degree_differs);
  auto e3 = exceptional_form(3);
  CHECK(e3.affine.coefficients[0].coefficient(Monomial::variable(1)) == 4);
  CHECK(e3.affine.coefficients[1].coefficient(Monomial::variable(0)) == -13);
  CHECK(e3.affine.coefficients[2].coefficient(Monomial::variable(1, 4)) == -52);
  CHECK(code_of([] { (void)exceptional_form(1); }) == ErrorCode::Precondition);
  (void)r;
}

TEST_CASE("property: Cartan identity on constructed forms") {
  std::vector<ProjectiveOneForm> forms{pencil(), l1111({1, 1, 1, -3}), l1111({1, -1, 1, -1}),
                                       exceptional_form(2).form};
  for (const auto& w : forms) {
    auto c = radial_contraction(exterior_derivative(w));
    for (int j = 0; j < w.num_vars(); ++j) CHECK(c[static_cast<std::size_t>(j)] == w[j] * Rational(w.degree() + 2));
  }
}

TEST_CASE("property: projectivities preserve integrability and move singular ideals") {
  std::mt19937_64 rng(test_seed() + 23);
  std::vector<ProjectiveOneForm> forms{pencil(), l1111({1, 1, 1, -3}),
                                       ProjectiveOneForm::validate({z(1) * z(2), -z(0) * z(2) + z(3) * z(3), Polynomial(P3), -z(1) * z(3)})};
  for (const auto& w : forms) {
    for (int trial = 0; trial < 3; ++trial) {
      auto a = random_gl(4, rng);
      auto moved = apply_projectivity(w, a);
      CHECK(moved.degree() == w.degree());
      CHECK(integrability_check(moved) == integrability_check(w));
      std::vector<Polynomial> subst;
      for (const auto& f : w.coefficients()) subst.push_back(f.substitute_linear(a));
      CHECK(ideal_equal(Ideal(P3, moved.coefficients()), Ideal(P3, subst)));
    }
  }
}
