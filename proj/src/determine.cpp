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

#include "folia/determine.hpp"

#include <algorithm>
#include <map>

#include "folia/error.hpp"

namespace folia {

namespace {

using Exponents = std::vector<int>;

Exponents exponents_of(const Monomial& m, int n) {
  Exponents e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = m[i];
  return e;
}

// Columns are the polynomials, rows the monomials of degree `deg`.
Matrix coefficient_columns(const PolyRing& ring, const std::vector<Polynomial>& polys, int deg) {
  std::map<Exponents, std::size_t> row_of;
  for (const auto& m : monomials_of_degree(ring, deg)) row_of.emplace(exponents_of(m, ring.num_vars()), row_of.size());
  Matrix a(row_of.size(), polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c) {
    for (const auto& t : polys[c].terms()) a(row_of.at(exponents_of(t.mono, ring.num_vars())), c) = t.coef;
  }
  return a;
}

std::vector<std::vector<Rational>> rref_rows(const std::vector<std::vector<Rational>>& vecs) {
  if (vecs.empty()) return {};
  Matrix m = Matrix::from_rows(vecs);
  auto pivots = m.rref();
  auto rows = m.to_rows();
  rows.resize(pivots.size());
  return rows;
}

Polynomial poly_determinant(std::vector<std::vector<Polynomial>> m, const PolyRing& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * poly_determinant(std::move(minor), ring);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

std::vector<Polynomial> apply_matrix(const Matrix& m, const std::vector<Polynomial>& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Polynomial acc(f.front().ring());
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m(i, k) != 0) acc += f[k] * m(i, k);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

// p = c q for some rational c.
bool proportional(const std::vector<Polynomial>& p, const std::vector<Polynomial>& q) {
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero() != q[i].is_zero()) return false;
    if (p[i].is_zero()) continue;
    if (!ratio) ratio = p[i].leading().coef / q[i].leading().coef;
    if (!(p[i] == q[i] * *ratio)) return false;
  }
  return true;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Matrix m = Matrix::from_rows({a, b});
  return m.rank() <= 1;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) { return p.evaluate(point); }

}  // namespace

std::vector<LinearSyzygy> linear_syzygy_space(const ProjectiveOneForm& omega) {
  const int n = omega.num_vars();
  const PolyRing& ring = omega.ring();
  // Unknown M(i, j) sits in column i * n + j and multiplies z_i F_j.
  std::vector<Polynomial> products;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) products.push_back(omega[j] * Polynomial::variable(ring, i));
  }
  auto kernel = coefficient_columns(ring, products, omega.degree() + 2).kernel();
  std::vector<Rational> euler(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) euler[static_cast<std::size_t>(i * n + i)] = 1;
  std::vector<std::vector<Rational>> chosen{euler};
  for (const auto& v : rref_rows(kernel)) {
    auto trial = chosen;
    trial.push_back(v);
    if (Matrix::from_rows(trial).rank() == trial.size()) chosen = std::move(trial);
  }
  if (chosen.size() != kernel.size()) {
    throw Error(ErrorCode::InternalInconsistency, "Euler syzygy missing from the linear syzygy space");
  }
  std::vector<LinearSyzygy> out;
  for (const auto& v : chosen) {
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v[static_cast<std::size_t>(i * n + j)];
      }
    }
    out.push_back(matrix_to_syzygy(ring, m));
  }
  return out;
}

std::vector<std::vector<Rational>> constant_syzygy_space(const ProjectiveOneForm& omega) {
  return rref_rows(coefficient_columns(omega.ring(), omega.coefficients(), omega.degree() + 1).kernel());
}

Matrix syzygy_to_matrix(const LinearSyzygy& s) {
  const std::size_t n = s.entries.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& l = s.entries[j];
    if (!l.is_zero() && l.degree() != 1) throw Error(ErrorCode::Precondition, "syzygy entries must be linear");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = l.coefficient(Monomial::variable(static_cast<int>(i)));
  }
  return m;
}

LinearSyzygy matrix_to_syzygy(const PolyRing& ring, const Matrix& m) {
  if (m.rows() != static_cast<std::size_t>(ring.num_vars()) || m.cols() != m.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix size differs from the number of variables");
  }
  LinearSyzygy s;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Polynomial l(ring);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0) l += Polynomial::variable(ring, static_cast<int>(i)) * m(i, j);
    }
    s.entries.push_back(std::move(l));
  }
  return s;
}

ProjectiveOneForm distribution_from_matrix(const ProjectiveOneForm& omega, const Matrix& m) {
  if (m.rows() != static_cast<std::size_t>(omega.num_vars()) || m.cols() != m.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix size differs from the number of variables");
  }
  if (m.determinant() == 0) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  auto out = ProjectiveOneForm::validate(apply_matrix(m, omega.coefficients()));
  if (!ideal_equal(Ideal(omega.ring(), omega.coefficients()), Ideal(out.ring(), out.coefficients()))) {
    throw Error(ErrorCode::InternalInconsistency, "invertible matrix changed the singular ideal");
  }
  return out;
}

Matrix DistributionFamily::matrix_at(const std::vector<Rational>& alpha) const {
  if (alpha.size() != matrices.size()) throw Error(ErrorCode::DimensionMismatch, "wrong number of parameters");
  Matrix m(matrices.front().rows(), matrices.front().cols());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] != 0) m = m + matrices[k] * alpha[k];
  }
  return m;
}

std::vector<Polynomial> DistributionFamily::member_at(const std::vector<Rational>& alpha) const {
  return apply_matrix(matrix_at(alpha), base.coefficients());
}

DistributionFamily distribution_family(const ProjectiveOneForm& omega, bool check_split, const Limits& limits) {
  if (check_split && !is_split(omega, limits)) {
    throw Error(ErrorCode::Precondition, "distribution families need a split foliation");
  }
  auto basis = linear_syzygy_space(omega);
  const int k = static_cast<int>(basis.size());
  if (k > kMaxVars) throw Error(ErrorCode::Precondition, "too many linear syzygies for a parameter ring");
  PolyRing params(k);
  std::vector<Matrix> matrices;
  std::vector<std::vector<Polynomial>> members;
  for (const auto& s : basis) {
    matrices.push_back(syzygy_to_matrix(s));
    members.push_back(apply_matrix(matrices.back(), omega.coefficients()));
  }
  const std::size_t n = matrices.front().rows();
  std::vector<std::vector<Polynomial>> generic(n, std::vector<Polynomial>(n, Polynomial(params)));
  for (int a = 0; a < k; ++a) {
    const auto& m = matrices[static_cast<std::size_t>(a)];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m(i, j) != 0) generic[i][j] += Polynomial::variable(params, a) * m(i, j);
      }
    }
  }
  Polynomial det = poly_determinant(std::move(generic), params);
  return DistributionFamily{omega,  std::move(basis), std::move(matrices), std::move(members), k, params,
                            std::move(det)};
}

namespace {

std::vector<Polynomial> quadratic_system(const std::vector<std::vector<Polynomial>>& members, const PolyRing& params,
                                         bool base_integrable) {
  const int k = static_cast<int>(members.size());
  const int nz = members.front().front().ring().num_vars();
  std::vector<TwoForm> derivs;
  for (const auto& m : members) derivs.push_back(exterior_derivative(m));
  std::map<std::pair<std::array<int, 3>, Exponents>, Polynomial> collected;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      ThreeForm t = wedge(members[static_cast<std::size_t>(a)], derivs[static_cast<std::size_t>(b)]);
      if (a == 0 && b == 0 && base_integrable && !t.is_zero()) {
        throw Error(ErrorCode::InternalInconsistency, "base block of the integrability system is nonzero");
      }
      const Polynomial ab = Polynomial::variable(params, a) * Polynomial::variable(params, b);
      for (const auto& [idx, p] : t.components()) {
        for (const auto& term : p.terms()) {
          auto it = collected.try_emplace(std::make_pair(idx, exponents_of(term.mono, nz)), params).first;
          it->second += ab * term.coef;
        }
      }
    }
  }
  std::vector<Polynomial> out;
  for (auto& [key, p] : collected) {
    if (p.is_zero()) continue;
    Polynomial q = p.monic();
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

// Coordinates on the image of alpha -> sum alpha_k omega_k. Different alpha
// give the same distribution exactly when they differ by a vector whose
// matrix has constant syzygies as rows; those directions become gamma.
struct Reduced {
  std::vector<std::size_t> effective;
  std::vector<std::vector<Rational>> kernel;
  PolyRing ring{1};
  std::vector<Polynomial> system;
  /// Beta for which every matrix in the fiber is singular.
  std::vector<Polynomial> degenerate;
};

Reduced reduce_family(const DistributionFamily& family) {
  const auto& members = family.members;
  const PolyRing& zr = family.base.ring();
  const int deg = family.base.degree() + 1;
  auto monos = monomials_of_degree(zr, deg);
  const std::size_t nz = family.base.coefficients().size();
  Matrix flat(nz * monos.size(), members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    for (std::size_t j = 0; j < nz; ++j) {
      for (std::size_t r = 0; r < monos.size(); ++r) flat(j * monos.size() + r, c) = members[c][j].coefficient(monos[r]);
    }
  }
  Reduced red;
  red.kernel = flat.kernel();
  Matrix echelon = flat;
  red.effective = echelon.rref();
  const int e = static_cast<int>(red.effective.size());
  red.ring = PolyRing(e);
  std::vector<std::vector<Polynomial>> eff_members;
  for (auto i : red.effective) eff_members.push_back(members[i]);
  red.system = quadratic_system(eff_members, red.ring, integrability_check(family.base));

  // det(sum beta_e M_e + sum gamma_i K_i) in beta and gamma, split by gamma monomial.
  const int total = e + static_cast<int>(red.kernel.size());
  PolyRing both(total);
  const std::size_t n = family.matrices.front().rows();
  std::vector<std::vector<Polynomial>> generic(n, std::vector<Polynomial>(n, Polynomial(both)));
  auto add = [&](const Matrix& m, int var) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m(i, j) != 0) generic[i][j] += Polynomial::variable(both, var) * m(i, j);
      }
    }
  };
  for (int i = 0; i < e; ++i) add(family.matrices[red.effective[static_cast<std::size_t>(i)]], i);
  for (std::size_t g = 0; g < red.kernel.size(); ++g) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (red.kernel[g][k] != 0) m = m + family.matrices[k] * red.kernel[g][k];
    }
    add(m, e + static_cast<int>(g));
  }
  Polynomial det = poly_determinant(std::move(generic), both);
  std::map<Exponents, std::vector<Term>> by_gamma;
  for (const auto& t : det.terms()) {
    Exponents g;
    Monomial beta;
    for (int v = 0; v < total; ++v) {
      if (v < e) {
        beta.set(v, t.mono[v]);
      } else {
        g.push_back(t.mono[v]);
      }
    }
    by_gamma[g].push_back({beta, t.coef});
  }
  for (auto& [g, terms] : by_gamma) red.degenerate.push_back(Polynomial::from_terms(red.ring, std::move(terms)));
  return red;
}

}  // namespace

std::vector<Polynomial> integrability_system(const DistributionFamily& family) {
  return quadratic_system(family.members, family.parameter_ring, integrability_check(family.base));
}

IntegrableMembers integrable_members(const DistributionFamily& family, const Limits& limits,
                                     const MemberOptions& options) {
  IntegrableMembers result;
  const int k = family.parameter_dim;
  if (k > options.max_parameter_dim) {
    result.note = "parameter dimension " + std::to_string(k) + " exceeds the limit " +
                  std::to_string(options.max_parameter_dim);
    return result;
  }
  std::vector<Rational> base_alpha(static_cast<std::size_t>(k));
  base_alpha[0] = 1;
  if (!integrability_check(family.base)) {
    result.note = "base member is not integrable";
    return result;
  }
  const Reduced red = reduce_family(family);
  const auto ue = red.effective.size();
  const auto& system = red.system;
  std::vector<Rational> base(ue);
  base[0] = 1;

  // An invertible parameter point over beta, trying small gamma in order.
  auto lift = [&](const std::vector<Rational>& beta) -> std::optional<std::vector<Rational>> {
    static constexpr int kSteps[] = {0, 1, -1, 2, -2};
    const std::size_t ng = red.kernel.size();
    std::vector<std::size_t> step(ng, 0);
    for (;;) {
      std::vector<Rational> alpha(static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < ue; ++i) alpha[red.effective[i]] += beta[i];
      for (std::size_t g = 0; g < ng; ++g) {
        for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] += red.kernel[g][i] * kSteps[step[g]];
      }
      if (family.matrix_at(alpha).determinant() != 0) {
        if (!integrability_check(family.member_at(alpha))) {
          throw Error(ErrorCode::InternalInconsistency, "solution of the integrability system is not integrable");
        }
        return alpha;
      }
      std::size_t pos = 0;
      while (pos < ng && step[pos] + 1 == std::size(kSteps)) step[pos++] = 0;
      if (pos >= ng) return std::nullopt;
      ++step[pos];
    }
  };

  // Scans beta = e_0 + t v and beta = v over small integer directions v with v_0 = 0.
  auto scan = [&](std::size_t wanted) {
    std::vector<std::vector<Rational>> found_beta;
    std::vector<std::vector<Rational>> found;
    auto accept = [&](const std::vector<Rational>& beta) {
      if (proportional(beta, base)) return;
      for (const auto& f : found_beta) {
        if (proportional(beta, f)) return;
      }
      for (const auto& q : system) {
        if (evaluate(q, beta) != 0) return;
      }
      if (auto alpha = lift(beta)) {
        found_beta.push_back(beta);
        found.push_back(*alpha);
      }
    };
    if (ue < 2) return found;
    for (int bound = 1; bound <= options.scan_bound && found.size() < wanted; ++bound) {
      std::vector<int> v(ue, -bound);
      v[0] = 0;
      for (;;) {
        int top = 0;
        for (int x : v) top = std::max(top, std::abs(x));
        if (top == bound) {
          std::vector<Rational> dir(v.begin(), v.end());
          std::vector<Rational> shifted(ue);
          for (std::size_t i = 0; i < ue; ++i) shifted[i] = base[i] + dir[i];
          // q(e_0 + t v) = lin t + quad t^2, since q(e_0) = 0 on an integrable base.
          std::optional<Rational> root;
          bool whole_line = true;
          bool consistent = true;
          bool at_infinity = true;
          for (const auto& q : system) {
            const Rational quad = evaluate(q, dir);
            const Rational lin = evaluate(q, shifted) - quad;
            if (quad != 0) at_infinity = false;
            if (lin == 0 && quad == 0) continue;
            whole_line = false;
            if (quad == 0) {
              consistent = false;
              continue;
            }
            const Rational t = -lin / quad;
            if (!root) {
              root = t;
            } else if (*root != t) {
              consistent = false;
            }
          }
          auto point = [&](const Rational& t) {
            std::vector<Rational> beta(ue);
            for (std::size_t i = 0; i < ue; ++i) beta[i] = base[i] + dir[i] * t;
            return beta;
          };
          if (whole_line) {
            for (int t = 1; t <= 3 && found.size() < wanted; ++t) accept(point(t));
          } else if (consistent && root && *root != 0) {
            accept(point(*root));
          }
          if (at_infinity && found.size() < wanted) accept(dir);
          if (found.size() >= wanted) break;
        }
        std::size_t pos = 1;
        while (pos < ue && v[pos] == bound) v[pos++] = -bound;
        if (pos >= ue) break;
        ++v[pos];
      }
    }
    return found;
  };

  if (ue == 1) {
    result.kind = IntegrableMembers::Kind::finite;
    result.dimension = 0;
    result.points = {base_alpha};
    return result;
  }
  try {
    if (system.empty()) {
      result.dimension = static_cast<int>(ue) - 1;
    } else {
      Ideal jp = saturate(Ideal(red.ring, system), Ideal(red.ring, red.degenerate), limits);
      if (jp.is_unit()) throw Error(ErrorCode::InternalInconsistency, "integrable base lost after saturation");
      HilbertData hs = hilbert_data(jp, limits);
      result.dimension = hs.krull_dim - 1;
      if (result.dimension == 0) {
        // The base is the only point iff every beta_i (i >= 1) is nilpotent modulo jp.
        const int e = static_cast<int>(hs.multiplicity.get_si());
        bool only_base = true;
        for (std::size_t i = 1; i < ue && only_base; ++i) {
          only_base = jp.contains(Polynomial::variable(red.ring, static_cast<int>(i)).pow(e));
        }
        if (only_base) {
          result.kind = IntegrableMembers::Kind::finite;
          result.points = {base_alpha};
          return result;
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExhausted) throw;
    result.note = std::string("budget exhausted: ") + e.what();
    result.points = scan(1);
    return result;
  }
  if (result.dimension == 0) {
    result.points = scan(1);
    result.note = "finitely many solutions besides the base; not all are rational on the scanned lines";
    return result;
  }
  result.points = scan(2);
  if (result.points.size() == 2) {
    result.kind = IntegrableMembers::Kind::positive_dimensional;
  } else {
    result.note = "positive-dimensional solution set but fewer than two witnesses found on the scanned lines";
  }
  return result;
}

std::string kind_name(Determination::Kind k) {
  switch (k) {
    case Determination::Kind::unique:
      return "unique";
    case Determination::Kind::non_unique:
      return "non-unique";
    case Determination::Kind::inconclusive:
      break;
  }
  return "inconclusive";
}

std::string kind_name(IntegrableMembers::Kind k) {
  switch (k) {
    case IntegrableMembers::Kind::finite:
      return "finite";
    case IntegrableMembers::Kind::positive_dimensional:
      return "positive-dimensional";
    case IntegrableMembers::Kind::inconclusive:
      break;
  }
  return "inconclusive";
}

Determination is_determined_by_singular_scheme(const ProjectiveOneForm& omega, const Limits& limits,
                                               const MemberOptions& options) {
  if (!integrability_check(omega)) throw Error(ErrorCode::Precondition, "form is not integrable");
  Determination out;
  try {
    out.splitting_type = splitting_type(omega, limits);
    const int b = out.splitting_type.b;
    const int d = omega.degree();
    if (b <= -1) {
      out.kind = Determination::Kind::unique;
      out.reason = "a <= b <= -1: the Euler syzygy is the only linear syzygy";
      return out;
    }
    if (b == 1 && d != 1) {
      out.kind = Determination::Kind::unique;
      out.reason = "pull-back of a plane foliation of degree " + std::to_string(d);
      return out;
    }
    auto family = distribution_family(omega, false, limits);
    auto members = integrable_members(family, limits, options);
    if (members.kind == IntegrableMembers::Kind::finite && members.points.size() == 1) {
      out.kind = Determination::Kind::unique;
      out.reason = "the base is the only integrable member of a " + std::to_string(family.parameter_dim) +
                   "-parameter family";
      return out;
    }
    const Ideal sat = saturate(singular_ideal(omega), limits);
    for (const auto& alpha : members.points) {
      auto coeffs = family.member_at(alpha);
      if (proportional(coeffs, omega.coefficients())) continue;
      auto candidate = ProjectiveOneForm::validate(coeffs);
      if (candidate.degree() != omega.degree() || !integrability_check(candidate)) continue;
      if (!ideal_equal(saturate(singular_ideal(candidate), limits), sat)) continue;
      out.kind = Determination::Kind::non_unique;
      out.reason = "a second integrable member of the " + std::to_string(family.parameter_dim) +
                   "-parameter family has the same singular scheme";
      out.witness = candidate;
      return out;
    }
    out.kind = Determination::Kind::inconclusive;
    out.reason = members.note.empty() ? "no witness found" : members.note;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExhausted) throw;
    out.kind = Determination::Kind::inconclusive;
    out.reason = std::string("budget exhausted: ") + e.what();
  }
  return out;
}

std::optional<PullbackStructure> pullback_structure(const ProjectiveOneForm& omega, std::string* diagnostic) {
  auto constants = constant_syzygy_space(omega);
  if (constants.empty()) throw Error(ErrorCode::NoConstantSyzygy, "coefficients satisfy no constant relation");
  const auto& a = constants.front();
  const auto n = static_cast<std::size_t>(omega.num_vars());
  std::size_t p = 0;
  while (a[p] == 0) ++p;
  RationalSquare c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    c[i][i] = 1;
    c[i][p] = a[i];
  }
  auto moved = apply_projectivity(omega, c);
  const int ip = static_cast<int>(p);
  std::string why;
  if (!moved[ip].is_zero()) why = "coefficient of dz'" + std::to_string(p) + " does not vanish";
  for (int k = 0; k < moved.num_vars() && why.empty(); ++k) {
    if (!moved[k].free_of(ip)) why = "coefficient " + std::to_string(k) + " depends on z'" + std::to_string(p);
  }
  if (!why.empty()) {
    if (diagnostic) *diagnostic = why;
    return std::nullopt;
  }
  PolyRing plane_ring(omega.num_vars() - 1);
  std::vector<int> var_map;
  for (int i = 0; i < omega.num_vars(); ++i) var_map.push_back(i < ip ? i : (i == ip ? -1 : i - 1));
  std::vector<Polynomial> plane;
  for (int k = 0; k < moved.num_vars(); ++k) {
    if (k != ip) plane.push_back(moved[k].embed(plane_ring, var_map));
  }
  return PullbackStructure{ProjectiveOneForm::validate(std::move(plane)), std::move(c), ip};
}

}  // namespace folia
