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
#include "folia/groebner.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

PolyRing P3(4);

Ideal twisted_cubic() {
  auto z = [](int i) { return var(P3, i); };
  return Ideal(P3, {z(0) * z(2) - z(1) * z(1), z(0) * z(3) - z(1) * z(2), z(1) * z(3) - z(2) * z(2)});
}

Ideal skew_lines() {
  auto z = [](int i) { return var(P3, i); };
  return Ideal(P3, {z(0) * z(2), z(0) * z(3), z(1) * z(2), z(1) * z(3)});
}

// The Gröbner basis is checked against linear algebra: every element lies in
// the ideal, Buchberger's criterion holds under naive division, and the
// standard monomials count (R/I)_d.
void check_groebner(const Ideal& ideal, int max_degree) {
  const auto& gb = ideal.groebner_basis();
  for (const auto& g : gb) CHECK(in_ideal_by_linear_algebra(ideal.ring(), ideal.generators(), g));
  for (const auto& f : ideal.generators()) CHECK(naive_remainder(f, gb).is_zero());
  CHECK(passes_s_pair_check(gb));
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.leading().mono);
  for (int d = 0; d <= max_degree; ++d) {
    CHECK(standard_monomial_count(ideal.ring(), leads, d) ==
          quotient_dimension(ideal.ring(), ideal.generators(), d));
  }
}

// Alternating sum of graded Betti numbers as a Laurent polynomial.
std::map<int, Integer> betti_alternating(const FreeResolution& res) {
  std::map<int, Integer> out;
  auto b = res.betti();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (const auto& [deg, n] : b[i]) out[deg] += (i % 2 == 0 ? 1 : -1) * n;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("twisted cubic basis, Hilbert data and resolution") {
  auto i = twisted_cubic();
  check_groebner(i, 6);
  auto h = hilbert_data(i);
  CHECK(h.krull_dim == 2);
  CHECK(h.multiplicity == 3);
  for (int t = 0; t <= 6; ++t) CHECK(h.dimension(t) == quotient_dimension(P3, i.generators(), t));
  auto res = free_resolution(i);
  CHECK(res.length() == 2);
  CHECK(res.betti()[1] == std::map<int, int>{{2, 3}});
  CHECK(res.betti()[2] == std::map<int, int>{{3, 2}});
  CHECK(res.is_minimal());
  CHECK(res.composites_vanish());
  CHECK(betti_alternating(res) == h.numerator);
}

TEST_CASE("lex basis passes the S-pair check") {
  PolyRing l(3, OrderKind::lex);
  auto x = var(l, 0), y = var(l, 1), z = var(l, 2);
  Ideal i(l, {x * x + y * z - cst(l, 1), x * y - z, y * y * y - x});
  const auto& gb = i.groebner_basis();
  CHECK(passes_s_pair_check(gb));
  for (const auto& f : i.generators()) CHECK(naive_remainder(f, gb).is_zero());
}

TEST_CASE("redundant generators give the same minimal resolution") {
  auto base = twisted_cubic().generators();
  auto extended = base;
  extended.push_back(base[0] * var(P3, 3) + base[1] * var(P3, 0));
  extended.push_back(base[2] * Rational(5) - base[1]);
  Ideal i(P3, extended);
  CHECK(minimal_generators(i).size() == 3);
  auto res = free_resolution(i, true);
  CHECK(res.is_minimal());
  CHECK(res.betti() == free_resolution(twisted_cubic()).betti());
  auto raw = free_resolution(i, false);
  CHECK_FALSE(raw.is_minimal());
  CHECK(raw.composites_vanish());
  CHECK(betti_alternating(raw) == betti_alternating(res));
}

TEST_CASE("skew lines: resolution and finite-length Ext") {
  auto i = skew_lines();
  auto h = hilbert_data(i);
  CHECK(h.krull_dim == 2);
  CHECK(h.multiplicity == 2);
  auto res = free_resolution(i);
  CHECK(res.betti()[1] == std::map<int, int>{{2, 4}});
  CHECK(res.betti()[2] == std::map<int, int>{{3, 4}});
  CHECK(res.betti()[3] == std::map<int, int>{{4, 1}});
  CHECK(betti_alternating(res) == h.numerator);
  auto e3 = ext_module(res, 3);
  CHECK(e3.finite_length());
  CHECK(e3.graded_dimensions() == std::map<int, Integer>{{-4, 1}});
  for (int t = -8; t <= 2; ++t) CHECK(e3.dimension(t) == e3.hilbert().dimension(t));
  auto e2 = ext_module(res, 2);
  CHECK(e2.krull_dim() == 2);
  for (int t = -6; t <= 2; ++t) CHECK(e2.dimension(t) == e2.hilbert().dimension(t));
  CHECK(ext_module(res, 4).is_zero());
}

TEST_CASE("twisted cubic has no middle Ext") {
  auto res = free_resolution(twisted_cubic());
  CHECK(ext_module(res, 3).is_zero());
  CHECK(ext_module(res, 1).is_zero());
  auto e2 = ext_module(res, 2);
  CHECK(e2.krull_dim() == 2);
  for (int t = -5; t <= 3; ++t) CHECK(e2.dimension(t) == e2.hilbert().dimension(t));
}

TEST_CASE("syzygies of a regular sequence are Koszul") {
  std::vector<Polynomial> gens{var(P3, 0), var(P3, 1) * var(P3, 1), var(P3, 2)};
  auto syz = syzygy_module(gens);
  CHECK(syz.size() == 3);
  for (const auto& s : syz) {
    Polynomial sum(P3);
    for (std::size_t k = 0; k < gens.size(); ++k) sum += s.components[k] * gens[k];
    CHECK(sum.is_zero());
    CHECK(s.is_homogeneous());
  }
}

TEST_CASE("intersection, colon and sum") {
  auto z = [](int i) { return var(P3, i); };
  Ideal a(P3, {z(0)}), b(P3, {z(1)});
  CHECK(ideal_equal(intersect(a, b), Ideal(P3, {z(0) * z(1)})));
  Ideal i(P3, {z(0) * z(0), z(0) * z(1)});
  CHECK(ideal_equal(colon(i, Ideal(P3, {z(0)})), Ideal(P3, {z(0), z(1)})));
  CHECK(ideal_equal(colon(i, Ideal(P3, {z(1)})), Ideal(P3, {z(0)})));
  CHECK(ideal_equal(ideal_sum(a, b), Ideal(P3, {z(1), z(0)})));
  CHECK(Ideal::unit(P3).is_unit());
  CHECK_FALSE(a.is_unit());
}

TEST_CASE("saturation: embedded point is removed by both routes") {
  auto z = [](int i) { return var(P3, i); };
  // (z0) intersected with the square of the irrelevant ideal.
  Ideal i(P3, {z(0) * z(0), z(0) * z(1), z(0) * z(2), z(0) * z(3)});
  CHECK(ideal_equal(saturate(i), Ideal(P3, {z(0)})));
  CHECK(ideal_equal(saturate_by_variables(i), Ideal(P3, {z(0)})));
}

TEST_CASE("property: saturating J times m^2 recovers J by both routes") {
  std::mt19937_64 rng(test_seed() + 7);
  for (int trial = 0; trial < 4; ++trial) {
    // A complete intersection of a random linear and a random quadric form is saturated.
    auto l = random_form(P3, 1, rng, 4);
    auto q = random_form(P3, 2, rng, 5);
    Ideal j(P3, {l, q});
    std::vector<Polynomial> gens;
    for (const auto& g : j.generators()) {
      for (const auto& m : monomials_of_degree(P3, 2)) gens.push_back(g.mul_monomial(m));
    }
    Ideal i(P3, gens);
    auto s1 = saturate(i);
    auto s2 = saturate_by_variables(i);
    CHECK(ideal_equal(s1, s2));
    CHECK(ideal_equal(s1, saturate(j)));
    for (const auto& g : s1.generators()) CHECK(in_ideal_by_linear_algebra(P3, saturate(j).groebner_basis(), g));
  }
}

TEST_CASE("property: random ideals pass the oracle checks") {
  std::mt19937_64 rng(test_seed() + 11);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polynomial> gens;
    const int ngens = 2 + trial % 3;
    for (int k = 0; k < ngens; ++k) gens.push_back(random_form(P3, 2 + (k + trial) % 2, rng));
    Ideal i(P3, gens);
    check_groebner(i, 5);
    auto res = free_resolution(i);
    CHECK(res.is_minimal());
    CHECK(res.composites_vanish());
    CHECK(betti_alternating(res) == hilbert_data(i).numerator);
  }
}

TEST_CASE("property: monomial Hilbert numerator matches monomial counting") {
  std::mt19937_64 rng(test_seed() + 13);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 1 + trial % 5; ++k) {
      std::vector<int> ex{e(rng), e(rng), e(rng), e(rng)};
      auto m = Monomial::from_exponents(ex);
      if (!m.is_one()) gens.push_back(m);
    }
    auto h = make_hilbert_data(4, monomial_hilbert_numerator(gens));
    for (int d = 0; d <= 8; ++d) CHECK(h.dimension(d) == standard_monomial_count(P3, gens, d));
  }
}

TEST_CASE("budget exhaustion raises an error") {
  Limits tiny;
  tiny.max_pair_reductions = 2;
  auto i = twisted_cubic();
  Ideal fresh(P3, i.generators());
  try {
    (void)fresh.groebner_basis(tiny);
    FAIL("expected budget exhaustion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExhausted);
  }
}

TEST_CASE("inhomogeneous input is rejected where grading matters") {
  Ideal i(P3, {var(P3, 0) + cst(P3, 1)});
  CHECK_THROWS_AS(free_resolution(i), Error);
  CHECK_THROWS_AS(hilbert_data(i), Error);
}
