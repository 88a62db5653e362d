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
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "folia/poly.hpp"

namespace folia {

/// Work limits for the Gröbner machinery. Exhausting one raises
/// Error(BudgetExhausted); it never produces a partial answer.
struct Limits {
  /// S-pairs plus generator reductions allowed in one Buchberger run.
  long max_pair_reductions = 400000;
  /// Longest free resolution accepted; 0 means num_vars + 1.
  int max_resolution_length = 0;
};

/// Defaults, with max_pair_reductions overridden by FOLIA_STEP_BUDGET when set.
const Limits& default_limits();

/// Element of a graded free module sum_k R(-twists[k]); twists[k] is the
/// degree of the k-th basis vector.
struct FreeModuleElement {
  std::vector<Polynomial> components;
  std::vector<int> twists;

  bool is_zero() const;
  /// deg(component_k) + twists[k] for any nonzero component; -1 when zero.
  int degree() const;
  bool is_homogeneous() const;
};

/// Homogeneous map between graded free modules. entries[r][c] is the image
/// of source basis vector c along target basis vector r.
struct GradedMap {
  std::vector<int> source;
  std::vector<int> target;
  std::vector<std::vector<Polynomial>> entries;

  FreeModuleElement column(std::size_t c) const;
  GradedMap transpose_dual() const;
};

class Ideal {
 public:
  /// Generators must live in `ring`; zero generators are dropped. Resolutions,
  /// Hilbert series and saturation additionally need homogeneous generators.
  Ideal(PolyRing ring, std::vector<Polynomial> generators);

  static Ideal irrelevant(PolyRing ring);
  static Ideal unit(PolyRing ring);

  const PolyRing& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  /// Reduced Gröbner basis in the ring's order, computed once and cached.
  const std::vector<Polynomial>& groebner_basis(const Limits& limits = default_limits()) const;
  bool contains(const Polynomial& f) const;
  bool is_unit() const;
  bool is_zero() const { return generators_.empty(); }
  /// The same ideal viewed in a ring with another monomial order.
  Ideal with_order(const PolyRing& ring) const;

 private:
  struct Cache;
  PolyRing ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const Limits& limits = default_limits());

/// Full reduction of f by a Gröbner basis (any generating set works, but
/// the remainder is canonical only for a Gröbner basis).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// S-polynomial of two polynomials with respect to their leading terms.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Minimal homogeneous generating set, extracted degree by degree.
std::vector<Polynomial> minimal_generators(const Ideal& ideal,
                                           const Limits& limits = default_limits());

/// Generators of {(g_0..g_k) : sum g_i gens_i = 0}; twists are deg(gens_i).
std::vector<FreeModuleElement> syzygy_module(std::span<const Polynomial> gens,
                                             const Limits& limits = default_limits());

/// Minimal generators of the kernel of a homogeneous map.
std::vector<FreeModuleElement> kernel(const GradedMap& map, const PolyRing& ring,
                                      const Limits& limits = default_limits());

/// Free resolution of R/I: maps[i] is the differential F_{i+1} -> F_i, F_0 = R.
struct FreeResolution {
  PolyRing ring;
  std::vector<GradedMap> maps;

  int length() const { return static_cast<int>(maps.size()); }
  /// Degrees of the basis of F_i.
  std::vector<int> degrees(int i) const;
  /// Graded Betti numbers: betti()[i][j] = number of basis vectors of F_i in degree j.
  std::vector<std::map<int, int>> betti() const;
  /// True when no differential has a nonzero constant entry.
  bool is_minimal() const;
  /// Every composite d_i o d_{i+1} is the zero map.
  bool composites_vanish() const;
};

/// `minimal` resolves the given generators first and then prunes unit entries
/// to a fixpoint; without it the first differential keeps the generators as given.
FreeResolution free_resolution(const Ideal& ideal, bool minimal = true,
                               const Limits& limits = default_limits());
/// Cancels unit entries until none remain.
FreeResolution minimize(FreeResolution res);

/// Hilbert series numerator(t) / (1 - t)^num_vars; the numerator may have
/// negative exponents for twisted modules.
struct HilbertData {
  int num_vars = 0;
  std::map<int, Integer> numerator;
  /// -1 for the zero module.
  int krull_dim = -1;
  Integer multiplicity = 0;

  /// Dimension of the graded piece of degree t.
  Integer dimension(int t) const;
  /// Numerator after cancelling every (1 - t) factor.
  std::map<int, Integer> reduced_numerator() const;
};

HilbertData make_hilbert_data(int num_vars, std::map<int, Integer> numerator);
HilbertData hilbert_data(const Ideal& ideal, const Limits& limits = default_limits());
/// Numerator of the Hilbert series of R/M for a monomial ideal M.
std::map<int, Integer> monomial_hilbert_numerator(std::vector<Monomial> gens);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b, const Limits& limits = default_limits());
/// {f : f J subset of I}.
Ideal colon(const Ideal& i, const Ideal& j, const Limits& limits = default_limits());
/// I : J^infinity by iterating colon until it stabilizes.
Ideal saturate(const Ideal& i, const Ideal& j, const Limits& limits = default_limits());
/// I : (z_0..z_n)^infinity by iterated colon.
Ideal saturate(const Ideal& i, const Limits& limits = default_limits());
/// I : z_var^infinity from a Gröbner basis with z_var ranked cheapest.
Ideal saturate_by_variable(const Ideal& i, int var, const Limits& limits = default_limits());
/// Intersection over all variables of I : z_i^infinity.
Ideal saturate_by_variables(const Ideal& i, const Limits& limits = default_limits());
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Ext^k(R/I, R) as the cohomology of the dualized minimal resolution.
class ExtModule {
 public:
  ExtModule(PolyRing ring, int index, std::vector<int> dual_degrees,
            std::optional<GradedMap> incoming, std::optional<GradedMap> outgoing,
            HilbertData hilbert);

  int index() const noexcept { return index_; }
  const HilbertData& hilbert() const noexcept { return hilbert_; }
  int krull_dim() const noexcept { return hilbert_.krull_dim; }
  bool is_zero() const noexcept { return hilbert_.numerator.empty(); }
  bool finite_length() const noexcept { return hilbert_.krull_dim <= 0; }

  /// dim Ext^k_t by exact linear algebra on the dual complex in degree t.
  Integer dimension(int t) const;
  /// Nonzero graded dimensions; requires finite length.
  std::map<int, Integer> graded_dimensions() const;

 private:
  PolyRing ring_;
  int index_;
  std::vector<int> dual_degrees_;
  std::optional<GradedMap> incoming_;
  std::optional<GradedMap> outgoing_;
  HilbertData hilbert_;
};

ExtModule ext_module(const Ideal& ideal, int k, const Limits& limits = default_limits());
ExtModule ext_module(const FreeResolution& res, int k, const Limits& limits = default_limits());

/// Rank of a homogeneous map restricted to source degree t.
std::size_t graded_rank(const GradedMap& map, const PolyRing& ring, int t);

}  // namespace folia
