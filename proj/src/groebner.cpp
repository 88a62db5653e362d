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

#include "folia/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <utility>

#include "engine.hpp"
#include "folia/linalg.hpp"

namespace folia {

using detail::ModOrder;
using detail::MVec;

const Limits& default_limits() {
  static const Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("FOLIA_STEP_BUDGET")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v > 0) l.max_pair_reductions = v;
    }
    return l;
  }();
  return limits;
}

bool FreeModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

int FreeModuleElement::degree() const {
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (!components[k].is_zero()) return components[k].degree() + twists[k];
  }
  return -1;
}

bool FreeModuleElement::is_homogeneous() const {
  const int d = degree();
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& p = components[k];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || p.degree() + twists[k] != d) return false;
  }
  return true;
}

FreeModuleElement GradedMap::column(std::size_t c) const {
  FreeModuleElement e;
  e.twists = target;
  for (const auto& row : entries) e.components.push_back(row[c]);
  return e;
}

GradedMap GradedMap::transpose_dual() const {
  GradedMap out;
  for (int d : target) out.source.push_back(-d);
  for (int d : source) out.target.push_back(-d);
  for (std::size_t c = 0; c < source.size(); ++c) {
    std::vector<Polynomial> row;
    for (std::size_t r = 0; r < target.size(); ++r) row.push_back(entries[r][c]);
    out.entries.push_back(std::move(row));
  }
  return out;
}

namespace {

ModOrder ideal_order(const PolyRing& ring) { return ModOrder{ring, {0}, 0}; }

bool all_homogeneous(std::span<const Polynomial> ps) {
  return std::all_of(ps.begin(), ps.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

void require_homogeneous(std::span<const Polynomial> ps, const char* what) {
  if (!all_homogeneous(ps)) throw Error(ErrorCode::Inhomogeneous, std::string(what) + " needs homogeneous input");
}

std::vector<Polynomial> basis_polys(const std::vector<MVec>& basis, const PolyRing& ring) {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& v : basis) out.push_back(detail::component(v, 0, ring));
  return out;
}

}  // namespace

struct Ideal::Cache {
  std::mutex mu;
  std::optional<std::vector<Polynomial>> gb;
};

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> generators)
    : ring_(ring), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "generator from another ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::irrelevant(PolyRing ring) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ring.num_vars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::unit(PolyRing ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

const std::vector<Polynomial>& Ideal::groebner_basis(const Limits& limits) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) {
    std::vector<MVec> inputs;
    for (const auto& g : generators_) inputs.push_back(detail::to_mvec(g));
    auto result = detail::buchberger(ideal_order(ring_), std::move(inputs), limits);
    cache_->gb = basis_polys(result.basis, ring_);
  }
  return *cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return std::any_of(gb.begin(), gb.end(), [](const Polynomial& p) { return p.is_constant(); });
}

Ideal Ideal::with_order(const PolyRing& ring) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.change_ring(ring));
  return Ideal(ring, std::move(gens));
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const Limits& limits) {
  return ideal.groebner_basis(limits);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<MVec> b;
  for (const auto& g : basis) {
    if (!(g.ring() == f.ring())) throw Error(ErrorCode::RingMismatch, "normal form across rings");
    if (!g.is_zero()) b.push_back(detail::to_mvec(g));
  }
  return detail::component(detail::reduce(detail::to_mvec(f), b, ideal_order(f.ring())), 0, f.ring());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const Monomial l = f.leading().mono.lcm(g.leading().mono);
  return f.mul_monomial(l / f.leading().mono, 1 / f.leading().coef) -
         g.mul_monomial(l / g.leading().mono, 1 / g.leading().coef);
}

std::vector<Polynomial> minimal_generators(const Ideal& ideal, const Limits& limits) {
  require_homogeneous(ideal.generators(), "minimal generators");
  std::vector<MVec> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(detail::to_mvec(g));
  std::vector<Polynomial> out;
  for (auto k : detail::minimal_subset(ideal_order(ideal.ring()), inputs, limits)) {
    out.push_back(ideal.generators()[k]);
  }
  return out;
}

std::vector<FreeModuleElement> kernel(const GradedMap& map, const PolyRing& ring,
                                      const Limits& limits) {
  ModOrder target{ring, map.target, 0};
  ModOrder source{ring, map.source, 0};
  if (map.target.empty()) throw Error(ErrorCode::Precondition, "kernel of a map into zero");
  std::vector<MVec> cols;
  for (std::size_t c = 0; c < map.source.size(); ++c) {
    cols.push_back(detail::to_mvec(map.column(c), target));
  }
  auto syz = detail::syzygies(target, cols, map.source, limits);
  bool homogeneous = true;
  for (const auto& row : map.entries) homogeneous = homogeneous && all_homogeneous(row);
  std::vector<std::size_t> keep;
  if (homogeneous) {
    keep = detail::minimal_subset(source, syz, limits);
  } else {
    for (std::size_t k = 0; k < syz.size(); ++k) keep.push_back(k);
  }
  std::vector<FreeModuleElement> out;
  for (auto k : keep) out.push_back(detail::to_element(syz[k], ring, map.source));
  return out;
}

std::vector<FreeModuleElement> syzygy_module(std::span<const Polynomial> gens,
                                             const Limits& limits) {
  if (gens.empty()) return {};
  GradedMap map;
  map.target = {0};
  map.entries.resize(1);
  for (const auto& g : gens) {
    map.source.push_back(std::max(g.degree(), 0));
    map.entries[0].push_back(g);
  }
  return kernel(map, gens.front().ring(), limits);
}

std::vector<int> FreeResolution::degrees(int i) const {
  if (i == 0) return maps.empty() ? std::vector<int>{0} : maps[0].target;
  if (i < 0 || i > length()) return {};
  return maps[static_cast<std::size_t>(i - 1)].source;
}

std::vector<std::map<int, int>> FreeResolution::betti() const {
  std::vector<std::map<int, int>> out;
  for (int i = 0; i <= length(); ++i) {
    std::map<int, int> row;
    for (int d : degrees(i)) ++row[d];
    out.push_back(std::move(row));
  }
  return out;
}

bool FreeResolution::is_minimal() const {
  for (const auto& m : maps) {
    for (const auto& row : m.entries) {
      for (const auto& e : row) {
        if (!e.is_zero() && e.is_constant()) return false;
      }
    }
  }
  return true;
}

bool FreeResolution::composites_vanish() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    const auto& a = maps[i];
    const auto& b = maps[i + 1];
    for (std::size_t r = 0; r < a.target.size(); ++r) {
      for (std::size_t c = 0; c < b.source.size(); ++c) {
        Polynomial s(ring);
        for (std::size_t k = 0; k < a.source.size(); ++k) s += a.entries[r][k] * b.entries[k][c];
        if (!s.is_zero()) return false;
      }
    }
  }
  return true;
}

namespace {

void erase_column(GradedMap& m, std::size_t c) {
  for (auto& row : m.entries) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
  m.source.erase(m.source.begin() + static_cast<std::ptrdiff_t>(c));
}

void erase_row(GradedMap& m, std::size_t r) {
  m.entries.erase(m.entries.begin() + static_cast<std::ptrdiff_t>(r));
  m.target.erase(m.target.begin() + static_cast<std::ptrdiff_t>(r));
}

void cancel_unit(FreeResolution& res, std::size_t i, std::size_t r, std::size_t c) {
  GradedMap& d = res.maps[i];
  const Rational u = d.entries[r][c].leading().coef;
  for (std::size_t rr = 0; rr < d.target.size(); ++rr) {
    if (rr == r || d.entries[rr][c].is_zero()) continue;
    const Polynomial factor = d.entries[rr][c] * (1 / u);
    for (std::size_t cc = 0; cc < d.source.size(); ++cc) {
      if (cc == c || d.entries[r][cc].is_zero()) continue;
      d.entries[rr][cc] -= factor * d.entries[r][cc];
    }
  }
  erase_row(d, r);
  erase_column(d, c);
  if (i > 0) erase_column(res.maps[i - 1], r);
  if (i + 1 < res.maps.size()) erase_row(res.maps[i + 1], c);
}

}  // namespace

FreeResolution minimize(FreeResolution res) {
  for (;;) {
    bool found = false;
    for (std::size_t i = 0; i < res.maps.size() && !found; ++i) {
      auto& m = res.maps[i];
      for (std::size_t r = 0; r < m.target.size() && !found; ++r) {
        for (std::size_t c = 0; c < m.source.size() && !found; ++c) {
          const auto& e = m.entries[r][c];
          if (!e.is_zero() && e.is_constant()) {
            cancel_unit(res, i, r, c);
            found = true;
          }
        }
      }
    }
    if (!found) break;
  }
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    if (res.maps[i].source.empty()) {
      res.maps.resize(i);
      break;
    }
  }
  return res;
}

FreeResolution free_resolution(const Ideal& ideal, bool minimal, const Limits& limits) {
  require_homogeneous(ideal.generators(), "free resolution");
  FreeResolution res{ideal.ring(), {}};
  if (ideal.generators().empty()) return res;
  const int max_len =
      limits.max_resolution_length > 0 ? limits.max_resolution_length : ideal.ring().num_vars() + 1;
  GradedMap d1;
  d1.target = {0};
  d1.entries.resize(1);
  for (const auto& g : ideal.generators()) {
    d1.source.push_back(g.degree());
    d1.entries[0].push_back(g);
  }
  res.maps.push_back(std::move(d1));
  for (;;) {
    auto ker = kernel(res.maps.back(), ideal.ring(), limits);
    if (ker.empty()) break;
    if (res.length() >= max_len) {
      throw Error(ErrorCode::BudgetExhausted, "free resolution longer than the allowed length");
    }
    GradedMap next;
    next.target = res.maps.back().source;
    next.entries.resize(next.target.size());
    for (const auto& k : ker) {
      next.source.push_back(k.degree());
      for (std::size_t r = 0; r < next.target.size(); ++r) next.entries[r].push_back(k.components[r]);
    }
    res.maps.push_back(std::move(next));
  }
  return minimal ? minimize(std::move(res)) : res;
}

namespace {

using Laurent = std::map<int, Integer>;

void prune_zeros(Laurent& p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
}

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) out[i + j] += x * y;
  }
  prune_zeros(out);
  return out;
}

// Divides by (1 - t); requires p(1) == 0.
Laurent divide_one_minus_t(const Laurent& p) {
  Laurent q;
  if (p.empty()) return q;
  Integer acc = 0;
  const int lo = p.begin()->first;
  const int hi = p.rbegin()->first;
  for (int i = lo; i < hi; ++i) {
    auto it = p.find(i);
    if (it != p.end()) acc += it->second;
    if (acc != 0) q[i] = acc;
  }
  return q;
}

Integer value_at_one(const Laurent& p) {
  Integer s = 0;
  for (const auto& kv : p) s += kv.second;
  return s;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Laurent hilbert_numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {{0, 1}};
  if (gens.front().is_one()) return {};
  bool coprime = true;
  int pivot = -1;
  int best = 1;
  for (int v = 0; v < kMaxVars; ++v) {
    int count = 0;
    for (const auto& g : gens) count += g[v] > 0 ? 1 : 0;
    if (count > best) {
      best = count;
      pivot = v;
      coprime = false;
    }
  }
  if (coprime) {
    Laurent out{{0, 1}};
    for (const auto& g : gens) out = laurent_mul(out, Laurent{{0, 1}, {g.degree(), -1}});
    return out;
  }
  std::vector<Monomial> sum = gens;
  sum.push_back(Monomial::variable(pivot));
  std::vector<Monomial> quot;
  for (const auto& g : gens) {
    Monomial q = g;
    if (q[pivot] > 0) q.set(pivot, q[pivot] - 1);
    quot.push_back(q);
  }
  Laurent out = hilbert_numerator_rec(std::move(sum));
  for (const auto& [i, x] : hilbert_numerator_rec(std::move(quot))) out[i + 1] += x;
  prune_zeros(out);
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::map<int, Integer> monomial_hilbert_numerator(std::vector<Monomial> gens) {
  return hilbert_numerator_rec(std::move(gens));
}

HilbertData make_hilbert_data(int num_vars, std::map<int, Integer> numerator) {
  prune_zeros(numerator);
  HilbertData h;
  h.num_vars = num_vars;
  h.numerator = std::move(numerator);
  if (h.numerator.empty()) return h;
  Laurent q = h.numerator;
  int order = 0;
  while (value_at_one(q) == 0) {
    q = divide_one_minus_t(q);
    ++order;
  }
  h.krull_dim = num_vars - order;
  h.multiplicity = value_at_one(q);
  return h;
}

std::map<int, Integer> HilbertData::reduced_numerator() const {
  Laurent q = numerator;
  while (!q.empty() && value_at_one(q) == 0) q = divide_one_minus_t(q);
  return q;
}

Integer HilbertData::dimension(int t) const {
  Integer out = 0;
  if (krull_dim <= 0) {
    // Finite length: the reduced numerator is the whole series.
    auto q = reduced_numerator();
    auto it = q.find(t);
    if (krull_dim == -1 || it == q.end()) return 0;
    return it->second;
  }
  for (const auto& [i, x] : numerator) {
    if (t - i < 0) continue;
    if (num_vars == 0) {
      if (t == i) out += x;
      continue;
    }
    out += x * binomial(t - i + num_vars - 1, num_vars - 1);
  }
  return out;
}

HilbertData hilbert_data(const Ideal& ideal, const Limits& limits) {
  require_homogeneous(ideal.generators(), "Hilbert series");
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner_basis(limits)) leads.push_back(g.leading().mono);
  return make_hilbert_data(ideal.ring().num_vars(), monomial_hilbert_numerator(std::move(leads)));
}

namespace {

Ideal from_generators(const PolyRing& ring, std::vector<Polynomial> gens, const Limits& limits) {
  Ideal raw(ring, std::move(gens));
  if (all_homogeneous(raw.generators())) return Ideal(ring, minimal_generators(raw, limits));
  return Ideal(ring, raw.groebner_basis(limits));
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, "ideals from different rings");
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b, const Limits& limits) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring(), {});
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  const std::size_t p = a.generators().size();
  std::vector<Polynomial> out;
  for (const auto& s : syzygy_module(gens, limits)) {
    Polynomial f(a.ring());
    for (std::size_t i = 0; i < p; ++i) f += s.components[i] * gens[i];
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return from_generators(a.ring(), std::move(out), limits);
}

Ideal colon(const Ideal& i, const Ideal& j, const Limits& limits) {
  check_same_ring(i, j);
  std::optional<Ideal> acc;
  for (const auto& g : j.generators()) {
    std::vector<Polynomial> gens{g};
    gens.insert(gens.end(), i.generators().begin(), i.generators().end());
    std::vector<Polynomial> parts;
    for (const auto& s : syzygy_module(gens, limits)) {
      if (!s.components[0].is_zero()) parts.push_back(s.components[0]);
    }
    Ideal q = from_generators(i.ring(), std::move(parts), limits);
    acc = acc ? intersect(*acc, q, limits) : q;
  }
  if (!acc) return Ideal::unit(i.ring());
  return *acc;
}

Ideal saturate(const Ideal& i, const Ideal& j, const Limits& limits) {
  Ideal cur = i;
  for (;;) {
    Ideal next = colon(cur, j, limits);
    if (ideal_equal(cur, next)) return next;
    cur = next;
  }
}

Ideal saturate(const Ideal& i, const Limits& limits) {
  return saturate(i, Ideal::irrelevant(i.ring()), limits);
}

Ideal saturate_by_variable(const Ideal& i, int var, const Limits& limits) {
  require_homogeneous(i.generators(), "saturation by a variable");
  const PolyRing cheap = i.ring().with_order(OrderKind::grevlex_cheapest, var);
  std::vector<Polynomial> gens;
  const Ideal reordered = i.with_order(cheap);
  for (const auto& g : reordered.groebner_basis(limits)) {
    int e = g.content_monomial()[var];
    gens.push_back(g.divide_monomial(Monomial::variable(var, e)).change_ring(i.ring()));
  }
  return from_generators(i.ring(), std::move(gens), limits);
}

Ideal saturate_by_variables(const Ideal& i, const Limits& limits) {
  std::optional<Ideal> acc;
  for (int v = 0; v < i.ring().num_vars(); ++v) {
    Ideal s = saturate_by_variable(i, v, limits);
    acc = acc ? intersect(*acc, s, limits) : s;
  }
  return *acc;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.ring().num_vars() != b.ring().num_vars()) return false;
  const Ideal bb = b.ring() == a.ring() ? b : b.with_order(a.ring());
  const auto& ga = a.groebner_basis();
  const auto& gb = bb.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t k = 0; k < ga.size(); ++k) {
    if (!(ga[k] == gb[k])) return false;
  }
  return true;
}

namespace {

// Hilbert numerator of F / (image of `map`), F the target of `map`.
Laurent cokernel_numerator(const PolyRing& ring, const std::vector<int>& target,
                           const std::optional<GradedMap>& map, const Limits& limits) {
  ModOrder order{ring, target, 0};
  std::vector<std::vector<Monomial>> leads(target.size());
  if (map) {
    std::vector<MVec> cols;
    for (std::size_t c = 0; c < map->source.size(); ++c) {
      cols.push_back(detail::to_mvec(map->column(c), order));
    }
    for (const auto& v : detail::buchberger(order, std::move(cols), limits).basis) {
      leads[static_cast<std::size_t>(v.front().comp)].push_back(v.front().mono);
    }
  }
  Laurent out;
  for (std::size_t c = 0; c < target.size(); ++c) {
    for (const auto& [i, x] : monomial_hilbert_numerator(leads[c])) out[i + target[c]] += x;
  }
  prune_zeros(out);
  return out;
}

Laurent free_numerator(const std::vector<int>& degrees) {
  Laurent out;
  for (int d : degrees) out[d] += 1;
  return out;
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out;
  for (int d : v) out.push_back(-d);
  return out;
}

}  // namespace

ExtModule::ExtModule(PolyRing ring, int index, std::vector<int> dual_degrees,
                     std::optional<GradedMap> incoming, std::optional<GradedMap> outgoing,
                     HilbertData hilbert)
    : ring_(ring),
      index_(index),
      dual_degrees_(std::move(dual_degrees)),
      incoming_(std::move(incoming)),
      outgoing_(std::move(outgoing)),
      hilbert_(std::move(hilbert)) {}

Integer ExtModule::dimension(int t) const {
  Integer dim = 0;
  for (int d : dual_degrees_) dim += static_cast<long>(count_monomials(ring_.num_vars(), t - d));
  if (dim == 0) return 0;
  if (outgoing_) dim -= static_cast<unsigned long>(graded_rank(*outgoing_, ring_, t));
  if (incoming_) dim -= static_cast<unsigned long>(graded_rank(*incoming_, ring_, t));
  return dim;
}

std::map<int, Integer> ExtModule::graded_dimensions() const {
  if (!finite_length()) throw Error(ErrorCode::Precondition, "module does not have finite length");
  return hilbert_.reduced_numerator();
}

ExtModule ext_module(const FreeResolution& res, int k, const Limits& limits) {
  const int n = res.ring.num_vars();
  if (k < 0 || k > res.length()) {
    return ExtModule(res.ring, k, {}, std::nullopt, std::nullopt, make_hilbert_data(n, {}));
  }
  const auto uk = static_cast<std::size_t>(k);
  std::vector<int> dual = negated(res.degrees(k));
  std::optional<GradedMap> incoming;
  std::optional<GradedMap> outgoing;
  if (k >= 1) incoming = res.maps[uk - 1].transpose_dual();
  if (k < res.length()) outgoing = res.maps[uk].transpose_dual();
  Laurent num = cokernel_numerator(res.ring, dual, incoming, limits);
  if (outgoing) {
    for (const auto& [i, x] : free_numerator(outgoing->target)) num[i] -= x;
    for (const auto& [i, x] : cokernel_numerator(res.ring, outgoing->target, outgoing, limits)) {
      num[i] += x;
    }
  }
  return ExtModule(res.ring, k, std::move(dual), std::move(incoming), std::move(outgoing),
                   make_hilbert_data(n, std::move(num)));
}

ExtModule ext_module(const Ideal& ideal, int k, const Limits& limits) {
  return ext_module(free_resolution(ideal, true, limits), k, limits);
}

std::size_t graded_rank(const GradedMap& map, const PolyRing& ring, int t) {
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> row_index;
  auto key = [&](std::size_t r, const Monomial& m) {
    std::vector<int> e(static_cast<std::size_t>(ring.num_vars()));
    for (int v = 0; v < ring.num_vars(); ++v) e[static_cast<std::size_t>(v)] = m[v];
    return std::make_pair(r, std::move(e));
  };
  for (std::size_t r = 0; r < map.target.size(); ++r) {
    for (const auto& m : monomials_of_degree(ring, t - map.target[r])) {
      row_index.emplace(key(r, m), row_index.size());
    }
  }
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
  for (std::size_t c = 0; c < map.source.size(); ++c) {
    for (const auto& mu : monomials_of_degree(ring, t - map.source[c])) {
      std::vector<std::pair<std::size_t, Rational>> col;
      for (std::size_t r = 0; r < map.target.size(); ++r) {
        for (const auto& term : map.entries[r][c].terms()) {
          auto it = row_index.find(key(r, term.mono * mu));
          if (it == row_index.end()) {
            throw Error(ErrorCode::Inhomogeneous, "map is not homogeneous of degree zero");
          }
          col.emplace_back(it->second, term.coef);
        }
      }
      cols.push_back(std::move(col));
    }
  }
  if (cols.empty() || row_index.empty()) return 0;
  Matrix m(row_index.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [r, v] : cols[c]) m(r, c) += v;
  }
  return m.rank();
}

}  // namespace folia
