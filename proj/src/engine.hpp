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

// Buchberger engine over free modules. Internal to the library.

#pragma once

#include <vector>

#include "folia/groebner.hpp"

namespace folia::detail {

struct MTerm {
  Monomial mono;
  int comp = 0;
  Rational coef;
};

/// Module vector, terms strictly descending in the module order.
using MVec = std::vector<MTerm>;

/// Term-over-position order on sum_k R(-shifts[k]). Components below
/// `split` form an elimination block that dominates everything else.
struct ModOrder {
  PolyRing ring;
  std::vector<int> shifts;
  int split = 0;

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const noexcept;
  int compare(const MTerm& a, const MTerm& b) const noexcept {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }
};

MVec to_mvec(const Polynomial& p, int comp = 0);
MVec to_mvec(const FreeModuleElement& e, const ModOrder& order, int offset = 0);
Polynomial component(const MVec& v, int comp, const PolyRing& ring);
FreeModuleElement to_element(const MVec& v, const PolyRing& ring, const std::vector<int>& twists,
                             int offset = 0);
void sort_mvec(MVec& v, const ModOrder& order);

struct GBResult {
  std::vector<MVec> basis;
  /// Input indices that were not redundant when processed degree by degree
  /// (homogeneous input only).
  std::vector<std::size_t> minimal_inputs;
};

/// Reduced Gröbner basis of the submodule spanned by `inputs`.
GBResult buchberger(const ModOrder& order, std::vector<MVec> inputs, const Limits& limits);

/// Full reduction of f by `basis`.
MVec reduce(MVec f, const std::vector<MVec>& basis, const ModOrder& order);

/// Generators of the syzygies of `columns` (vectors in the module described
/// by `order`), as vectors over sum_i R(-col_degrees[i]).
std::vector<MVec> syzygies(const ModOrder& order, const std::vector<MVec>& columns,
                           const std::vector<int>& col_degrees, const Limits& limits);

/// Indices of a minimal generating subset of homogeneous vectors.
std::vector<std::size_t> minimal_subset(const ModOrder& order, const std::vector<MVec>& gens,
                                        const Limits& limits);

}  // namespace folia::detail
