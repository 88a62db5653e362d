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

#include "engine.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <limits>
#include <utility>

namespace folia::detail {

int ModOrder::compare(const Monomial& a, int ca, const Monomial& b, int cb) const noexcept {
  if (split > 0) {
    const bool ba = ca < split;
    const bool bb = cb < split;
    if (ba != bb) return ba ? 1 : -1;
  }
  if (ring.graded()) {
    const int da = a.degree() + shifts[static_cast<std::size_t>(ca)];
    const int db = b.degree() + shifts[static_cast<std::size_t>(cb)];
    if (da != db) return da > db ? 1 : -1;
  }
  const int c = compare_monomials(ring, a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

void sort_mvec(MVec& v, const ModOrder& order) {
  std::sort(v.begin(), v.end(),
            [&](const MTerm& x, const MTerm& y) { return order.compare(x, y) > 0; });
}

MVec to_mvec(const Polynomial& p, int comp) {
  MVec out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono, comp, t.coef});
  return out;
}

MVec to_mvec(const FreeModuleElement& e, const ModOrder& order, int offset) {
  MVec out;
  for (std::size_t k = 0; k < e.components.size(); ++k) {
    for (const auto& t : e.components[k].terms()) {
      out.push_back({t.mono, static_cast<int>(k) + offset, t.coef});
    }
  }
  sort_mvec(out, order);
  return out;
}

Polynomial component(const MVec& v, int comp, const PolyRing& ring) {
  std::vector<Term> terms;
  for (const auto& t : v) {
    if (t.comp == comp) terms.push_back({t.mono, t.coef});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

FreeModuleElement to_element(const MVec& v, const PolyRing& ring, const std::vector<int>& twists,
                             int offset) {
  FreeModuleElement e;
  e.twists = twists;
  std::vector<std::vector<Term>> parts(twists.size());
  for (const auto& t : v) {
    const int k = t.comp - offset;
    if (k < 0 || k >= static_cast<int>(twists.size())) {
      throw Error(ErrorCode::InternalInconsistency, "module component out of range");
    }
    parts[static_cast<std::size_t>(k)].push_back({t.mono, t.coef});
  }
  for (auto& p : parts) e.components.push_back(Polynomial::from_terms(ring, std::move(p)));
  return e;
}

namespace {

struct Reducer {
  const MVec* v;
  std::uint32_t mask;
};

// Replaces f[pos..] by f[pos..] - c * m * g, where c * m * lead(g) cancels f[pos].
void subtract_at(MVec& f, std::size_t pos, const MVec& g, const Rational& c, const Monomial& m,
                 const ModOrder& order) {
  MVec out;
  out.reserve(f.size() + g.size());
  out.insert(out.end(), std::make_move_iterator(f.begin()),
             std::make_move_iterator(f.begin() + static_cast<std::ptrdiff_t>(pos)));
  std::size_t i = pos;
  std::size_t j = 0;
  Monomial gm;
  bool have = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have) {
      gm = g[j].mono * m;
      have = true;
    }
    if (j == g.size()) {
      out.push_back(std::move(f[i++]));
      continue;
    }
    if (i == f.size()) {
      out.push_back({gm, g[j].comp, -c * g[j].coef});
      ++j;
      have = false;
      continue;
    }
    const int cmp = order.compare(f[i].mono, f[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(std::move(f[i++]));
    } else if (cmp < 0) {
      out.push_back({gm, g[j].comp, -c * g[j].coef});
      ++j;
      have = false;
    } else {
      Rational coef = f[i].coef - c * g[j].coef;
      if (coef != 0) out.push_back({gm, g[j].comp, std::move(coef)});
      ++i;
      ++j;
      have = false;
    }
  }
  f = std::move(out);
}

const MVec* find_reducer(const MTerm& t, const std::vector<Reducer>& red) {
  const std::uint32_t tm = t.mono.support_mask();
  for (const auto& r : red) {
    const MTerm& lt = r.v->front();
    if (lt.comp != t.comp || (r.mask & ~tm) != 0) continue;
    if (lt.mono.divides(t.mono)) return r.v;
  }
  return nullptr;
}

void reduce_in_place(MVec& f, const std::vector<Reducer>& red, const ModOrder& order,
                     std::size_t start = 0) {
  std::size_t pos = start;
  while (pos < f.size()) {
    const MVec* g = find_reducer(f[pos], red);
    if (g == nullptr) {
      ++pos;
      continue;
    }
    const MTerm& lt = g->front();
    Monomial m = f[pos].mono / lt.mono;
    Rational c = f[pos].coef / lt.coef;
    subtract_at(f, pos, *g, c, m, order);
  }
}

void make_monic(MVec& f) {
  if (f.empty() || f.front().coef == 1) return;
  Rational inv = 1 / f.front().coef;
  for (auto& t : f) t.coef *= inv;
}

int vec_degree(const MVec& v, const ModOrder& order) {
  return v.front().mono.degree() + order.shifts[static_cast<std::size_t>(v.front().comp)];
}

bool vec_homogeneous(const MVec& v, const ModOrder& order) {
  if (v.empty()) return true;
  const int d = vec_degree(v, order);
  for (const auto& t : v) {
    if (t.mono.degree() + order.shifts[static_cast<std::size_t>(t.comp)] != d) return false;
  }
  return true;
}

struct Elem {
  MVec v;
  Monomial lead;
  int comp;
  std::uint32_t mask;
  bool active;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int comp;
  int deg;
};

class Engine {
 public:
  Engine(const ModOrder& order, const Limits& limits)
      : order_(order), limits_(limits), product_criterion_(order.shifts.size() == 1) {}

  GBResult run(std::vector<MVec> inputs) {
    GBResult result;
    bool homogeneous = order_.ring.graded();
    for (auto& v : inputs) {
      if (!v.empty() && !vec_homogeneous(v, order_)) homogeneous = false;
    }
    if (homogeneous) {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        if (!inputs[k].empty()) idx.push_back(k);
      }
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return vec_degree(inputs[a], order_) < vec_degree(inputs[b], order_);
      });
      std::size_t next = 0;
      while (!pairs_.empty() || next < idx.size()) {
        int delta = std::numeric_limits<int>::max();
        for (const auto& p : pairs_) delta = std::min(delta, p.deg);
        if (next < idx.size()) delta = std::min(delta, vec_degree(inputs[idx[next]], order_));
        while (process_pair_of_degree(delta)) {
        }
        while (next < idx.size() && vec_degree(inputs[idx[next]], order_) == delta) {
          tick();
          MVec h = std::move(inputs[idx[next]]);
          reduce_in_place(h, reducers_, order_);
          if (!h.empty()) {
            result.minimal_inputs.push_back(idx[next]);
            insert(std::move(h));
          }
          ++next;
        }
      }
      std::sort(result.minimal_inputs.begin(), result.minimal_inputs.end());
    } else {
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        if (inputs[k].empty()) continue;
        tick();
        MVec h = std::move(inputs[k]);
        reduce_in_place(h, reducers_, order_);
        if (!h.empty()) {
          result.minimal_inputs.push_back(k);
          insert(std::move(h));
        }
      }
      while (!pairs_.empty()) {
        int delta = std::numeric_limits<int>::max();
        for (const auto& p : pairs_) delta = std::min(delta, p.deg);
        process_pair_of_degree(delta);
      }
    }
    result.basis = finish();
    return result;
  }

 private:
  void tick() {
    if (++steps_ > limits_.max_pair_reductions) {
      throw Error(ErrorCode::BudgetExhausted, "Groebner basis step budget exhausted");
    }
  }

  // Processes the smallest pending pair of degree delta; false when none is left.
  bool process_pair_of_degree(int delta) {
    std::size_t best = pairs_.size();
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (pairs_[k].deg != delta) continue;
      if (best == pairs_.size() ||
          order_.compare(pairs_[k].lcm, pairs_[k].comp, pairs_[best].lcm, pairs_[best].comp) < 0) {
        best = k;
      }
    }
    if (best == pairs_.size()) return false;
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    tick();
    const Elem& a = elems_[p.i];
    const Elem& b = elems_[p.j];
    MVec s;
    {
      MVec left;
      left.reserve(a.v.size());
      const Monomial ma = p.lcm / a.lead;
      for (const auto& t : a.v) left.push_back({t.mono * ma, t.comp, t.coef});
      s = std::move(left);
      subtract_at(s, 0, b.v, 1, p.lcm / b.lead, order_);
    }
    reduce_in_place(s, reducers_, order_);
    if (!s.empty()) insert(std::move(s));
    return true;
  }

  void insert(MVec h) {
    make_monic(h);
    const std::size_t hi = elems_.size();
    elems_.push_back({std::move(h), Monomial(), 0, 0, false});
    Elem& H = elems_.back();
    H.lead = H.v.front().mono;
    H.comp = H.v.front().comp;
    H.mask = H.lead.support_mask();

    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      const Elem& G = elems_[g];
      if (!G.active || G.comp != H.comp) continue;
      Monomial l = G.lead.lcm(H.lead);
      fresh.push_back({g, hi, l, H.comp, l.degree() + order_.shifts[static_cast<std::size_t>(H.comp)]});
    }
    std::vector<Pair> kept;
    std::vector<bool> coprime;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      const bool cop = product_criterion_ && elems_[p.i].lead.coprime(H.lead);
      bool keep = true;
      if (!cop) {
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b) {
          if (fresh[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) {
        kept.push_back(p);
        coprime.push_back(cop);
      }
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != H.comp || !H.lead.divides(p.lcm)) return false;
      return elems_[p.i].lead.lcm(H.lead) != p.lcm && elems_[p.j].lead.lcm(H.lead) != p.lcm;
    });
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (!coprime[k]) pairs_.push_back(kept[k]);
    }
    for (std::size_t g = 0; g < hi; ++g) {
      Elem& G = elems_[g];
      if (G.active && G.comp == H.comp && H.lead.divides(G.lead)) G.active = false;
    }
    H.active = true;
    rebuild_reducers();
  }

  void rebuild_reducers() {
    reducers_.clear();
    for (const auto& e : elems_) {
      if (e.active) reducers_.push_back({&e.v, e.mask});
    }
  }

  std::vector<MVec> finish() {
    std::vector<MVec> out;
    for (auto& e : elems_) {
      if (e.active) out.push_back(std::move(e.v));
    }
    std::sort(out.begin(), out.end(),
              [&](const MVec& x, const MVec& y) { return order_.compare(x.front(), y.front()) > 0; });
    for (std::size_t k = 0; k < out.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t o = 0; o < out.size(); ++o) {
        if (o != k) others.push_back({&out[o], out[o].front().mono.support_mask()});
      }
      reduce_in_place(out[k], others, order_, 1);
    }
    return out;
  }

  const ModOrder& order_;
  const Limits& limits_;
  bool product_criterion_;
  long steps_ = 0;
  std::deque<Elem> elems_;
  std::vector<Pair> pairs_;
  std::vector<Reducer> reducers_;
};

}  // namespace

GBResult buchberger(const ModOrder& order, std::vector<MVec> inputs, const Limits& limits) {
  Engine engine(order, limits);
  return engine.run(std::move(inputs));
}

MVec reduce(MVec f, const std::vector<MVec>& basis, const ModOrder& order) {
  std::vector<Reducer> red;
  for (const auto& b : basis) {
    if (!b.empty()) red.push_back({&b, b.front().mono.support_mask()});
  }
  reduce_in_place(f, red, order);
  return f;
}

std::vector<MVec> syzygies(const ModOrder& order, const std::vector<MVec>& columns,
                           const std::vector<int>& col_degrees, const Limits& limits) {
  const int m = static_cast<int>(order.shifts.size());
  ModOrder ext{order.ring, order.shifts, m};
  ext.shifts.insert(ext.shifts.end(), col_degrees.begin(), col_degrees.end());
  std::vector<MVec> inputs;
  inputs.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    MVec v = columns[i];
    v.push_back({Monomial(), m + static_cast<int>(i), Rational(1)});
    inputs.push_back(std::move(v));
  }
  GBResult gb = buchberger(ext, std::move(inputs), limits);
  std::vector<MVec> out;
  for (auto& v : gb.basis) {
    if (v.front().comp < m) continue;
    for (auto& t : v) {
      if (t.comp < m) throw Error(ErrorCode::InternalInconsistency, "syzygy leaked into image block");
      t.comp -= m;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> minimal_subset(const ModOrder& order, const std::vector<MVec>& gens,
                                        const Limits& limits) {
  return buchberger(order, gens, limits).minimal_inputs;
}

}  // namespace folia::detail
