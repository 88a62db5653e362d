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

#include "folia/classify.hpp"

#include <string>

#include "folia/error.hpp"

namespace folia {

namespace {

// Everything derived from one ideal, computed on demand.
struct Analysis {
  Ideal ideal;
  const Limits& limits;
  std::optional<Ideal> sat_;
  std::optional<FreeResolution> res_;
  std::optional<HilbertData> hs_;
  std::optional<ExtModule> top_ext_;

  Analysis(Ideal i, const Limits& l) : ideal(std::move(i)), limits(l) {}

  int n() const { return ideal.ring().num_vars(); }
  const Ideal& sat() {
    if (!sat_) sat_ = saturate(ideal, limits);
    return *sat_;
  }
  const FreeResolution& res() {
    if (!res_) res_ = free_resolution(sat(), true, limits);
    return *res_;
  }
  const HilbertData& hs() {
    if (!hs_) hs_ = hilbert_data(sat(), limits);
    return *hs_;
  }
  // Ext^{n-1}(R/I^sat, R): the module that detects zero-dimensional components.
  const ExtModule& top_ext() {
    if (!top_ext_) top_ext_ = ext_module(res(), n() - 1, limits);
    return *top_ext_;
  }

  bool saturated() { return ideal_equal(ideal, sat()); }
  bool curve() { return hs().krull_dim == 2 && top_ext().finite_length(); }
  bool acm() { return res().length() == 2; }
  std::map<int, Integer> rao() {
    if (!curve()) throw Error(ErrorCode::Precondition, "Rao module needs a curve");
    std::map<int, Integer> out;
    for (const auto& [deg, dim] : top_ext().graded_dimensions()) out[-deg - n()] = dim;
    return out;
  }
  bool split() {
    const bool c = curve();
    const bool by_saturation = c && saturated();
    const bool by_resolution = c && acm();
    if (by_saturation != by_resolution) {
      throw Error(ErrorCode::InternalInconsistency,
                  std::string("split test disagrees: saturation says ") + (by_saturation ? "yes" : "no") +
                      ", resolution says " + (by_resolution ? "yes" : "no"));
    }
    return by_saturation;
  }
};

Integer count(int n, int m) { return Integer(static_cast<long>(count_monomials(n, m))); }
Integer binom3(int m) { return count(4, m); }

// s_m = n dim R_{m+1} - dim I_{m+d+2}, since the F_i span I.
Integer syzygy_count(int n, int d, const HilbertData& hs, int m) {
  const int top = m + d + 2;
  return n * count(n, m + 1) - (count(n, top) - hs.dimension(top));
}

SplittingType splitting_from_counts(const ProjectiveOneForm& omega, const Limits& limits) {
  if (omega.num_vars() != 4) throw Error(ErrorCode::Precondition, "splitting type needs a form on P^3");
  const int d = omega.degree();
  const Ideal ideal(omega.ring(), omega.coefficients());
  const HilbertData hs = hilbert_data(ideal, limits);
  // h0(T(m)) = s_m - dim R_m.
  auto s = [&](int m) { return syzygy_count(4, d, hs, m); };
  std::optional<int> first;
  for (int m = -1; m <= d + 2; ++m) {
    if (s(m) - binom3(m) > 0) {
      first = m;
      break;
    }
  }
  if (!first) throw Error(ErrorCode::ConsistencyFailure, "tangent sheaf has no sections in low degree");
  const int b = -*first;
  const int a = 2 - d - b;
  if (a > b) throw Error(ErrorCode::ConsistencyFailure, "syzygy counts give a > b");
  for (int m = *first; m <= *first + 3; ++m) {
    const Integer expected = binom3(m + a) + binom3(m + b) + binom3(m);
    if (s(m) != expected) {
      throw Error(ErrorCode::ConsistencyFailure, "syzygy count in degree " + std::to_string(m) +
                                                     " does not fit O(" + std::to_string(a) + ")+O(" +
                                                     std::to_string(b) + ")");
    }
  }
  return {a, b};
}

}  // namespace

bool is_saturated(const Ideal& ideal, const Limits& limits) { return Analysis(ideal, limits).saturated(); }
bool is_curve(const Ideal& ideal, const Limits& limits) { return Analysis(ideal, limits).curve(); }
bool is_acm(const Ideal& ideal, const Limits& limits) { return Analysis(ideal, limits).acm(); }
std::map<int, Integer> rao_dimensions(const Ideal& ideal, const Limits& limits) {
  return Analysis(ideal, limits).rao();
}

bool is_saturated(const ProjectiveOneForm& omega, const Limits& limits) {
  return is_saturated(singular_ideal(omega), limits);
}
bool is_curve(const ProjectiveOneForm& omega, const Limits& limits) {
  return is_curve(singular_ideal(omega), limits);
}
bool is_acm(const ProjectiveOneForm& omega, const Limits& limits) {
  return is_acm(singular_ideal(omega), limits);
}
bool is_split(const ProjectiveOneForm& omega, const Limits& limits) {
  return Analysis(singular_ideal(omega), limits).split();
}
std::map<int, Integer> rao_dimensions(const ProjectiveOneForm& omega, const Limits& limits) {
  return rao_dimensions(singular_ideal(omega), limits);
}

Integer syzygy_piece_dimension(const ProjectiveOneForm& omega, int m, const Limits& limits) {
  const HilbertData hs = hilbert_data(Ideal(omega.ring(), omega.coefficients()), limits);
  return syzygy_count(omega.num_vars(), omega.degree(), hs, m);
}

SplittingType splitting_type(const ProjectiveOneForm& omega, const Limits& limits) {
  if (!is_split(omega, limits)) throw Error(ErrorCode::Precondition, "tangent sheaf is not split");
  return splitting_from_counts(omega, limits);
}

ClassificationReport classify(const ProjectiveOneForm& omega, const Limits& limits) {
  if (omega.num_vars() != 4) throw Error(ErrorCode::Precondition, "classification needs a form on P^3");
  ClassificationReport r;
  r.degree = omega.degree();
  r.normal_twist = omega.degree() + 2;
  r.integrable = integrability_check(omega);
  Analysis an(singular_ideal(omega), limits);
  r.codim_ok = true;
  r.saturated = an.saturated();
  r.is_curve = an.curve();
  r.is_acm = an.acm();
  r.is_split = an.split();
  r.betti = an.res().betti();
  if (r.is_curve) r.rao_dims = an.rao();
  if (r.is_split) r.splitting_type = splitting_from_counts(omega, limits);
  return r;
}

}  // namespace folia
