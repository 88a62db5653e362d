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
#include "folia/linalg.hpp"
#include "folia/poly.hpp"
#include "support.hpp"

using namespace folia;
using folia::testing::cst;
using folia::testing::var;

namespace {

// Brute force: count exponent tuples of the given total degree.
long long brute_count(int n, int d) {
  if (n == 1) return d >= 0 ? 1 : 0;
  long long total = 0;
  for (int e = 0; e <= d; ++e) total += brute_count(n - 1, d - e);
  return total;
}

std::vector<Rational> random_point(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> p;
  for (int i = 0; i < n; ++i) {
    Rational q(d(rng), 1 + (d(rng) + 5) % 3);
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

RationalSquare random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  RationalSquare a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (auto& row : a) {
    for (auto& x : row) x = d(rng);
  }
  return a;
}

}  // namespace

TEST_CASE("ring construction bounds") {
  CHECK_THROWS_AS(PolyRing(0), Error);
  CHECK_THROWS_AS(PolyRing(kMaxVars + 1), Error);
  CHECK_THROWS_AS(PolyRing(3, OrderKind::grevlex_cheapest, 3), Error);
  CHECK(PolyRing(3).graded());
  CHECK_FALSE(PolyRing(3, OrderKind::lex).graded());
}

TEST_CASE("grevlex and lex orders on degree two monomials") {
  PolyRing g(3);
  auto gm = monomials_of_degree(g, 2);
  std::vector<std::string> got;
  for (const auto& m : gm) got.push_back(Polynomial::monomial(g, m).to_string());
  CHECK(got == std::vector<std::string>{"z0^2", "z0*z1", "z1^2", "z0*z2", "z1*z2", "z2^2"});

  PolyRing l(3, OrderKind::lex);
  got.clear();
  for (const auto& m : monomials_of_degree(l, 2)) got.push_back(Polynomial::monomial(l, m).to_string());
  CHECK(got == std::vector<std::string>{"z0^2", "z0*z1", "z0*z2", "z1^2", "z1*z2", "z2^2"});
}

TEST_CASE("cheapest variable ranks last") {
  PolyRing r(3, OrderKind::grevlex_cheapest, 0);
  // Among degree-one monomials z0 must be the smallest.
  auto ms = monomials_of_degree(r, 1);
  CHECK(ms.back() == Monomial::variable(0));
  // Any monomial containing z0 is below every z0-free monomial of the same degree.
  auto m2 = monomials_of_degree(r, 2);
  bool seen_z0 = false;
  for (const auto& m : m2) {
    if (m[0] > 0) seen_z0 = true;
    else CHECK_FALSE(seen_z0);
  }
}

TEST_CASE("monomial counts match brute force") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= 6; ++d) {
      CHECK(count_monomials(n, d) == brute_count(n, d));
      CHECK(static_cast<long long>(monomials_of_degree(PolyRing(n), d).size()) == brute_count(n, d));
    }
  }
  CHECK(count_monomials(4, -1) == 0);
}

TEST_CASE("arithmetic and canonical printing") {
  PolyRing r(2);
  auto x = var(r, 0), y = var(r, 1);
  auto p = (x + y).pow(2);
  CHECK(p.to_string() == "z0^2 + 2*z0*z1 + z1^2");
  CHECK((x * x - y * y).to_string() == "z0^2 - z1^2");
  CHECK((x * y * Rational(1, 2)).to_string() == "1/2*z0*z1");
  CHECK((p - p).is_zero());
  CHECK((-x + cst(r, 3)).to_string() == "-z0 + 3");
  CHECK(p.degree() == 2);
  CHECK(Polynomial(r).degree() == -1);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((x + cst(r, 1)).is_homogeneous());
  CHECK(p.coefficient(Monomial::from_exponents(std::vector<int>{1, 1})) == 2);
}

TEST_CASE("cross-ring arithmetic is rejected") {
  PolyRing a(2), b(3);
  CHECK_THROWS_AS(var(a, 0) + var(b, 0), Error);
  try {
    (void)(var(a, 0) * var(b, 1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RingMismatch);
  }
}

TEST_CASE("homogenize and dehomogenize") {
  PolyRing r(3);
  auto x = var(r, 0), y = var(r, 1);
  auto p = x * x + y + cst(r, 1);
  auto h = p.homogenize(2, 3);
  CHECK(h.is_homogeneous());
  CHECK(h.degree() == 3);
  CHECK(h.dehomogenize(2) == p);
  CHECK_THROWS_AS(p.homogenize(2, 1), Error);
  try {
    (void)p.homogenize(2, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeTooSmall);
  }
}

TEST_CASE("property: derivative obeys the product rule") {
  std::mt19937_64 rng(folia::testing::test_seed());
  PolyRing r(4);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = folia::testing::random_form(r, 1 + trial % 3, rng);
    auto g = folia::testing::random_form(r, 1 + trial % 4, rng);
    for (int v = 0; v < 4; ++v) {
      CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    }
    // Euler: sum z_i d_i f = deg(f) f
    Polynomial e(r);
    for (int v = 0; v < 4; ++v) e += var(r, v) * f.derivative(v);
    CHECK(e == f * Rational(f.degree()));
  }
}

TEST_CASE("property: linear substitution agrees with evaluation") {
  std::mt19937_64 rng(folia::testing::test_seed() + 1);
  PolyRing r(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = folia::testing::random_form(r, 3, rng, 6);
    auto a = random_matrix(4, rng);
    auto b = random_matrix(4, rng);
    auto x = random_point(4, rng);
    // p(A x) computed by hand.
    std::vector<Rational> ax(4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) ax[i] += a[i][j] * x[j];
    }
    CHECK(p.substitute_linear(a).evaluate(x) == p.evaluate(ax));
    // Composition: substituting A then B is substituting A B.
    auto ab = (Matrix::from_rows(a) * Matrix::from_rows(b)).to_rows();
    CHECK(p.substitute_linear(a).substitute_linear(b) == p.substitute_linear(ab));
  }
}

TEST_CASE("substitution by polynomials and embedding") {
  PolyRing r(2), s(3);
  auto p = var(r, 0) * var(r, 1);
  std::vector<Polynomial> vals{var(s, 0) + var(s, 2), var(s, 1)};
  CHECK(p.substitute(vals) == (var(s, 0) + var(s, 2)) * var(s, 1));
  std::vector<int> map{2, 0};
  CHECK(p.embed(s, map) == var(s, 2) * var(s, 0));
}

TEST_CASE("content monomial and monic") {
  PolyRing r(3);
  auto x = var(r, 0), y = var(r, 1);
  auto p = x * x * y * Rational(3) + x * y * y * Rational(6);
  CHECK(p.content_monomial() == Monomial::from_exponents(std::vector<int>{1, 1, 0}));
  CHECK(p.divide_monomial(p.content_monomial()) == x * Rational(3) + y * Rational(6));
  CHECK(p.monic().leading().coef == 1);
  CHECK(p.free_of(2));
  CHECK_FALSE(p.free_of(0));
}

TEST_CASE("change of order keeps the polynomial") {
  PolyRing r(3);
  PolyRing l = r.with_order(OrderKind::lex);
  auto p = var(r, 1).pow(3) + var(r, 0) * var(r, 2) * var(r, 2);
  auto q = p.change_ring(l);
  CHECK(q.change_ring(r) == p);
  CHECK(q.leading().mono == Monomial::from_exponents(std::vector<int>{1, 0, 2}));
  CHECK(p.leading().mono == Monomial::from_exponents(std::vector<int>{0, 3, 0}));
}

TEST_CASE("matrix inverse, determinant and kernel") {
  auto a = Matrix::from_rows({{2, 1}, {1, 1}});
  CHECK(a.determinant() == 1);
  CHECK(a * a.inverse() == Matrix::identity(2));
  auto s = Matrix::from_rows({{1, 2}, {2, 4}});
  CHECK(s.rank() == 1);
  CHECK_THROWS_AS(s.inverse(), Error);
  auto k = s.kernel();
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] + 2 * k[0][1] == 0);
}
