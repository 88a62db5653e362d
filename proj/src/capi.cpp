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

#include "folia/folia.h"

#include <atomic>
#include <chrono>
#include <cstring>
#include <string>

#include "folia/classify.hpp"
#include "folia/determine.hpp"
#include "folia/error.hpp"
#include "folia/formfile.hpp"
#include "json.hpp"

struct folia_form {
  folia::ProjectiveOneForm form;
  std::string name;
};

namespace {

using folia::Error;
using folia::ErrorCode;
using json = nlohmann::json;

thread_local std::string t_error;
thread_local std::string t_code;
thread_local int t_line = 0;
thread_local int t_column = 0;
std::atomic<long> g_budget{0};

folia::Limits limits() {
  folia::Limits l = folia::default_limits();
  if (long b = g_budget.load(); b > 0) l.max_pair_reductions = b;
  return l;
}

folia_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
      return FOLIA_ERR_SYNTAX;
    case ErrorCode::BudgetExhausted:
      return FOLIA_ERR_BUDGET;
    case ErrorCode::Io:
      return FOLIA_ERR_IO;
    case ErrorCode::Precondition:
    case ErrorCode::NoConstantSyzygy:
    case ErrorCode::SingularMatrix:
      return FOLIA_ERR_PRECONDITION;
    case ErrorCode::InternalInconsistency:
    case ErrorCode::ConsistencyFailure:
      return FOLIA_ERR_INTERNAL;
    default:
      return FOLIA_ERR_VALIDATION;
  }
}

template <class F>
folia_status guarded(F&& body) {
  t_error.clear();
  t_code.clear();
  t_line = t_column = 0;
  try {
    body();
    return FOLIA_OK;
  } catch (const folia::SyntaxError& e) {
    t_error = e.what();
    t_code = folia::error_code_name(e.code());
    t_line = e.line();
    t_column = e.column();
    return FOLIA_ERR_SYNTAX;
  } catch (const Error& e) {
    t_error = e.what();
    t_code = folia::error_code_name(e.code());
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_error = e.what();
    t_code = "InternalInconsistency";
    return FOLIA_ERR_INTERNAL;
  }
}

folia_status bad_argument(const char* what) {
  t_error = what;
  t_code = "Precondition";
  t_line = t_column = 0;
  return FOLIA_ERR_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string q(const folia::Rational& r) { return folia::rational_to_string(r); }

// Parameter-ring polynomials print with a_i instead of z_i.
std::string param_string(const folia::Polynomial& p) {
  std::string s = p.to_string();
  for (auto& c : s) {
    if (c == 'z') c = 'a';
  }
  return s;
}

json rationals(const std::vector<folia::Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(q(x));
  return out;
}

json polys(const std::vector<folia::Polynomial>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

json betti_json(const std::vector<std::map<int, int>>& betti) {
  json out = json::array();
  for (const auto& col : betti) {
    json c = json::object();
    for (const auto& [deg, n] : col) c[std::to_string(deg)] = n;
    out.push_back(c);
  }
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json members_json(const folia::IntegrableMembers& m) {
  json pts = json::array();
  for (const auto& p : m.points) pts.push_back(rationals(p));
  return {{"kind", folia::kind_name(m.kind)}, {"dimension", m.dimension}, {"points", pts}, {"note", m.note}};
}

void emit(char** out, const json& j) { *out = dup(j.dump(2) + "\n"); }

folia_form* wrap(folia::ProjectiveOneForm f, std::string name = {}) { return new folia_form{std::move(f), std::move(name)}; }

}  // namespace

extern "C" {

const char* folia_version(void) { return "0.1.0"; }
const char* folia_last_error(void) { return t_error.c_str(); }
const char* folia_last_error_code(void) { return t_code.c_str(); }
int folia_last_error_line(void) { return t_line; }
int folia_last_error_column(void) { return t_column; }
void folia_set_step_budget(long steps) { g_budget.store(steps > 0 ? steps : 0); }

folia_status folia_form_parse(const char* text, folia_form** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] {
    auto file = folia::parse_form_file(text);
    *out = wrap(file.form, file.name.value_or(""));
  });
}

folia_status folia_form_load(const char* path, folia_form** out) {
  if (!path || !out) return bad_argument("null argument");
  return guarded([&] {
    auto file = folia::load_form_file(path);
    *out = wrap(file.form, file.name.value_or(""));
  });
}

void folia_form_free(folia_form* form) { delete form; }

folia_status folia_form_print(const folia_form* form, char** out) {
  if (!form || !out) return bad_argument("null argument");
  return guarded([&] {
    folia::FormFile file{std::nullopt, std::nullopt, form->form};
    if (!form->name.empty()) file.name = form->name;
    *out = dup(folia::print_form_file(file));
  });
}

int folia_form_degree(const folia_form* form) { return form ? form->form.degree() : -1; }
int folia_form_num_vars(const folia_form* form) { return form ? form->form.num_vars() : 0; }
const char* folia_form_name(const folia_form* form) {
  return form && !form->name.empty() ? form->name.c_str() : nullptr;
}

void folia_string_free(char* s) { delete[] s; }

folia_status folia_check(const folia_form* form, char** out) {
  if (!form || !out) return bad_argument("null argument");
  return guarded([&] {
    const auto& f = form->form;
    const int dim = folia::singular_dimension(f);
    emit(out, {{"degree", f.degree()},
               {"num_vars", f.num_vars()},
               {"integrable", folia::integrability_check(f)},
               {"singular_dim", dim},
               {"codim_ok", dim < f.num_vars() - 1}});
  });
}

folia_status folia_classify(const folia_form* form, char** out) {
  if (!form || !out) return bad_argument("null argument");
  return guarded([&] {
    const auto lim = limits();
    auto t0 = std::chrono::steady_clock::now();
    auto r = folia::classify(form->form, lim);
    const double classify_ms = ms_since(t0);
    json verdicts = {{"integrable", r.integrable}, {"codim_ok", r.codim_ok}, {"saturated", r.saturated},
                     {"curve", r.is_curve},        {"acm", r.is_acm},         {"split", r.is_split},
                     {"connected", r.connected}};
    json rao = r.is_curve ? json::object() : json(nullptr);
    for (const auto& [deg, dim] : r.rao_dims) rao[std::to_string(deg)] = dim.get_str();
    json family = nullptr;
    json timings = {{"classify_ms", classify_ms}};
    if (r.is_split && r.integrable) {
      auto t1 = std::chrono::steady_clock::now();
      auto fam = folia::distribution_family(form->form, false, lim);
      auto members = folia::integrable_members(fam, lim);
      family = {{"dim", fam.parameter_dim}, {"integrable", folia::kind_name(members.kind)},
                {"integrable_dim", members.dimension}};
      timings["family_ms"] = ms_since(t1);
    }
    json j = {{"name", form->name.empty() ? json(nullptr) : json(form->name)},
              {"ambient", "P" + std::to_string(form->form.num_vars() - 1)},
              {"degree", r.degree},
              {"verdicts", verdicts},
              {"splitting_type", r.splitting_type ? json::array({r.splitting_type->a, r.splitting_type->b})
                                                  : json(nullptr)},
              {"normal_twist", r.normal_twist},
              {"rao", rao},
              {"betti", betti_json(r.betti)},
              {"family", family},
              {"timings", timings}};
    emit(out, j);
  });
}

folia_status folia_syzygies(const folia_form* form, char** out) {
  if (!form || !out) return bad_argument("null argument");
  return guarded([&] {
    json lin = json::array();
    for (const auto& s : folia::linear_syzygy_space(form->form)) lin.push_back(polys(s.entries));
    json cst = json::array();
    for (const auto& v : folia::constant_syzygy_space(form->form)) cst.push_back(rationals(v));
    emit(out, {{"linear", lin}, {"constant", cst}});
  });
}

folia_status folia_family(const folia_form* form, char** out) {
  if (!form || !out) return bad_argument("null argument");
  return guarded([&] {
    const auto lim = limits();
    auto fam = folia::distribution_family(form->form, true, lim);
    json sys = json::array();
    for (const auto& p : folia::integrability_system(fam)) sys.push_back(param_string(p));
    json syz = json::array();
    for (const auto& s : fam.syzygy_basis) syz.push_back(polys(s.entries));
    emit(out, {{"parameter_dim", fam.parameter_dim},
               {"syzygies", syz},
               {"degenerate_locus", param_string(fam.degenerate_locus)},
               {"system", sys},
               {"integrable", members_json(folia::integrable_members(fam, lim))}});
  });
}

folia_status folia_determine(const folia_form* form, char** out) {
  if (!form || !out) return bad_argument("null argument");
  return guarded([&] {
    auto d = folia::is_determined_by_singular_scheme(form->form, limits());
    emit(out, {{"verdict", folia::kind_name(d.kind)},
               {"reason", d.reason},
               {"splitting_type", json::array({d.splitting_type.a, d.splitting_type.b})},
               {"witness", d.witness ? json(folia::print_form(*d.witness)) : json(nullptr)}});
  });
}

folia_status folia_pullback_structure(const folia_form* form, char** out) {
  if (!form || !out) return bad_argument("null argument");
  return guarded([&] {
    std::string why;
    auto s = folia::pullback_structure(form->form, &why);
    if (!s) {
      emit(out, {{"found", false}, {"diagnostic", why}});
      return;
    }
    json rows = json::array();
    for (const auto& r : s->change) rows.push_back(rationals(r));
    emit(out, {{"found", true}, {"plane", folia::print_form(s->plane)}, {"change", rows}, {"ignored", s->ignored}});
  });
}

folia_status folia_make_logarithmic(const char* factors, const char* weights, int plane, folia_form** out) {
  if (!factors || !weights || !out) return bad_argument("null argument");
  return guarded([&] {
    folia::PolyRing ring(plane ? 3 : 4);
    auto fs = folia::parse_polynomial_list(ring, factors);
    auto ws = folia::parse_rational_list(weights);
    *out = wrap(folia::logarithmic_form(fs, ws));
  });
}

folia_status folia_make_pullback(const folia_form* plane, folia_form** out) {
  if (!plane || !out) return bad_argument("null argument");
  return guarded([&] { *out = wrap(folia::pullback_from_plane(plane->form)); });
}

folia_status folia_make_exceptional(int d, folia_form** out) {
  if (!out) return bad_argument("null argument");
  return guarded([&] { *out = wrap(folia::exceptional_form(d).form); });
}

folia_status folia_apply_projectivity(const folia_form* form, const char* matrix_rows, folia_form** out) {
  if (!form || !matrix_rows || !out) return bad_argument("null argument");
  return guarded([&] {
    folia::RationalSquare a;
    std::string text(matrix_rows);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i < text.size() && text[i] != ';') continue;
      a.push_back(folia::parse_rational_list(std::string_view(text).substr(start, i - start)));
      start = i + 1;
    }
    if (folia::Matrix::from_rows(a).determinant() == 0) {
      throw Error(ErrorCode::SingularMatrix, "projectivity must be invertible");
    }
    *out = wrap(folia::apply_projectivity(form->form, a), form->name);
  });
}

folia_status folia_groebner(int num_vars, const char* generators, char** out) {
  if (!generators || !out) return bad_argument("null argument");
  if (num_vars < 1 || num_vars > folia::kMaxVars) return bad_argument("num_vars out of range");
  return guarded([&] {
    const auto lim = limits();
    folia::PolyRing ring(num_vars);
    folia::Ideal ideal(ring, folia::parse_polynomial_list(ring, generators));
    json j = {{"groebner_basis", polys(ideal.groebner_basis(lim))}};
    bool homogeneous = true;
    for (const auto& g : ideal.generators()) homogeneous = homogeneous && g.is_homogeneous();
    if (homogeneous) {
      auto h = folia::hilbert_data(ideal, lim);
      json num = json::object();
      for (const auto& [deg, c] : h.numerator) num[std::to_string(deg)] = c.get_str();
      j["minimal_generators"] = polys(folia::minimal_generators(ideal, lim));
      j["hilbert"] = {{"numerator", num}, {"krull_dim", h.krull_dim}, {"multiplicity", h.multiplicity.get_str()}};
      j["betti"] = betti_json(folia::free_resolution(ideal, true, lim).betti());
    }
    emit(out, j);
  });
}

folia_status folia_saturate(int num_vars, const char* generators, char** out) {
  if (!generators || !out) return bad_argument("null argument");
  if (num_vars < 1 || num_vars > folia::kMaxVars) return bad_argument("num_vars out of range");
  return guarded([&] {
    const auto lim = limits();
    folia::PolyRing ring(num_vars);
    folia::Ideal ideal(ring, folia::parse_polynomial_list(ring, generators));
    auto by_colon = folia::saturate(ideal, lim);
    auto by_variables = folia::saturate_by_variables(ideal, lim);
    const bool agree = folia::ideal_equal(by_colon, by_variables);
    if (!agree) throw Error(ErrorCode::InternalInconsistency, "saturation routes disagree");
    emit(out, {{"saturation", polys(by_colon.generators())}, {"saturated", folia::ideal_equal(ideal, by_colon)}});
  });
}

}  // extern "C"
