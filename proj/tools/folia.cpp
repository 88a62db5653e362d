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

// Command-line front end. Talks to the library only through folia.h.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "folia/folia.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

enum Exit { kOk = 0, kInvalid = 1, kNotIntegrable = 2, kInconclusive = 3, kInternal = 4 };

struct FormDeleter {
  void operator()(folia_form* f) const { folia_form_free(f); }
};
using FormPtr = std::unique_ptr<folia_form, FormDeleter>;

int exit_for(folia_status s) {
  switch (s) {
    case FOLIA_OK:
      return kOk;
    case FOLIA_ERR_BUDGET:
      return kInconclusive;
    case FOLIA_ERR_INTERNAL:
      return kInternal;
    default:
      return kInvalid;
  }
}

int fail(const std::string& input, folia_status s) {
  std::cerr << "folia: " << input << ": " << folia_last_error() << "\n";
  return exit_for(s);
}

// Calls a report function and parses its JSON; returns the exit code on failure.
template <class F>
int report(const std::string& input, F&& call, json& out) {
  char* text = nullptr;
  folia_status s = call(&text);
  if (s != FOLIA_OK) return fail(input, s);
  out = json::parse(text);
  folia_string_free(text);
  return kOk;
}

int load(const std::string& path, FormPtr& form) {
  folia_form* raw = nullptr;
  folia_status s = folia_form_load(path.c_str(), &raw);
  if (s != FOLIA_OK) return fail(path, s);
  form.reset(raw);
  return kOk;
}

int write_form(const folia_form* form, const std::string& path) {
  char* text = nullptr;
  folia_status s = folia_form_print(form, &text);
  if (s != FOLIA_OK) return fail(path.empty() ? "-" : path, s);
  std::string body(text);
  folia_string_free(text);
  if (path.empty() || path == "-") {
    std::cout << body;
    return kOk;
  }
  std::ofstream out(path);
  out << body;
  if (!out) {
    std::cerr << "folia: cannot write " << path << "\n";
    return kInvalid;
  }
  return kOk;
}

// check must pass before the foliation-only commands run.
int require_foliation(const std::string& input, const folia_form* form) {
  json c;
  if (int rc = report(input, [&](char** t) { return folia_check(form, t); }, c)) return rc;
  if (!c["integrable"].get<bool>()) {
    std::cerr << "folia: " << input << ": form is not integrable\n";
    return kNotIntegrable;
  }
  return kOk;
}

std::string yes_no(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.get<std::string>();
}

std::string type_string(const json& t) {
  if (t.is_null()) return "-";
  return "(" + std::to_string(t[0].get<int>()) + ", " + std::to_string(t[1].get<int>()) + ")";
}

void print_classification(const json& r) {
  std::cout << r["input"].get<std::string>() << "\n";
  if (r["name"].is_string()) std::cout << "  name            " << r["name"].get<std::string>() << "\n";
  std::cout << "  ambient         " << r["ambient"].get<std::string>() << "\n";
  std::cout << "  degree          " << r["degree"].get<int>() << "\n";
  for (const char* key : {"integrable", "codim_ok", "saturated", "curve", "acm", "split", "connected"}) {
    std::string label = key;
    label.resize(16, ' ');
    std::cout << "  " << label << yes_no(r["verdicts"][key]) << "\n";
  }
  std::cout << "  splitting type  " << type_string(r["splitting_type"]) << "\n";
  std::cout << "  normal twist    " << r["normal_twist"].get<int>() << "\n";
  std::cout << "  rao             ";
  if (r["rao"].is_null()) std::cout << "-";
  else if (r["rao"].empty()) std::cout << "0";
  else for (const auto& [deg, dim] : r["rao"].items()) std::cout << deg << ":" << dim.get<std::string>() << " ";
  std::cout << "\n  betti          ";
  for (const auto& col : r["betti"]) {
    std::cout << " [";
    bool first = true;
    for (const auto& [deg, n] : col.items()) {
      std::cout << (first ? "" : " ") << deg << ":" << n.get<int>();
      first = false;
    }
    std::cout << "]";
  }
  std::cout << "\n";
  if (!r["family"].is_null()) {
    std::cout << "  family          dim " << r["family"]["dim"].get<int>() << ", integrable members "
              << r["family"]["integrable"].get<std::string>() << "\n";
  }
}

int classify_one(const std::string& path, json& out) {
  FormPtr form;
  if (int rc = load(path, form)) return rc;
  if (int rc = report(path, [&](char** t) { return folia_classify(form.get(), t); }, out)) return rc;
  out["input"] = path;
  return kOk;
}

int run_classify(const std::vector<std::string>& files, const std::string& dir, bool as_json, unsigned jobs) {
  std::vector<std::string> inputs = files;
  if (!dir.empty()) {
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
      if (entry.path().extension() == ".form") inputs.push_back(entry.path().string());
    }
    if (ec) {
      std::cerr << "folia: " << dir << ": " << ec.message() << "\n";
      return kInvalid;
    }
    std::sort(inputs.begin() + static_cast<long>(files.size()), inputs.end());
  }
  if (inputs.empty()) {
    std::cerr << "folia: no input files\n";
    return kInvalid;
  }
  std::vector<json> results(inputs.size());
  std::vector<int> codes(inputs.size(), kOk);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) codes[i] = classify_one(inputs[i], results[i]);
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(inputs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int rc = kOk;
  json all = json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    rc = std::max(rc, codes[i]);
    if (codes[i] != kOk) continue;
    if (as_json) {
      all.push_back(results[i]);
    } else {
      print_classification(results[i]);
    }
  }
  if (as_json) {
    const bool single = inputs.size() == 1 && dir.empty();
    if (!single || !all.empty()) std::cout << (single ? all[0] : all).dump(2) << "\n";
  }
  return rc;
}

int run_check(const std::string& path, bool as_json) {
  FormPtr form;
  if (int rc = load(path, form)) return rc;
  json c;
  if (int rc = report(path, [&](char** t) { return folia_check(form.get(), t); }, c)) return rc;
  c["input"] = path;
  if (as_json) {
    std::cout << c.dump(2) << "\n";
  } else {
    std::cout << path << ": degree " << c["degree"].get<int>() << ", integrable " << yes_no(c["integrable"])
              << ", Krull dimension of R/(F) " << c["singular_dim"].get<int>() << "\n";
  }
  if (!c["integrable"].get<bool>()) return kNotIntegrable;
  if (!c["codim_ok"].get<bool>()) {
    std::cerr << "folia: " << path << ": singular locus has codimension 1\n";
    return kInvalid;
  }
  return kOk;
}

int run_syzygies(const std::string& path, bool as_json) {
  FormPtr form;
  if (int rc = load(path, form)) return rc;
  json s;
  if (int rc = report(path, [&](char** t) { return folia_syzygies(form.get(), t); }, s)) return rc;
  s["input"] = path;
  if (as_json) {
    std::cout << s.dump(2) << "\n";
    return kOk;
  }
  std::cout << "linear syzygies: " << s["linear"].size() << "\n";
  for (const auto& row : s["linear"]) {
    std::cout << " ";
    for (const auto& e : row) std::cout << " [" << e.get<std::string>() << "]";
    std::cout << "\n";
  }
  std::cout << "constant syzygies: " << s["constant"].size() << "\n";
  for (const auto& row : s["constant"]) {
    std::cout << " ";
    for (const auto& e : row) std::cout << " " << e.get<std::string>();
    std::cout << "\n";
  }
  return kOk;
}

int run_family(const std::string& path, bool as_json) {
  FormPtr form;
  if (int rc = load(path, form)) return rc;
  if (int rc = require_foliation(path, form.get())) return rc;
  json f;
  if (int rc = report(path, [&](char** t) { return folia_family(form.get(), t); }, f)) return rc;
  f["input"] = path;
  const bool inconclusive = f["integrable"]["kind"] == "inconclusive";
  if (as_json) {
    std::cout << f.dump(2) << "\n";
  } else {
    std::cout << "parameters: " << f["parameter_dim"].get<int>() << "\n";
    std::cout << "degenerate locus: " << f["degenerate_locus"].get<std::string>() << "\n";
    std::cout << "integrability equations: " << f["system"].size() << "\n";
    for (const auto& q : f["system"]) std::cout << "  " << q.get<std::string>() << "\n";
    const auto& m = f["integrable"];
    std::cout << "integrable members: " << m["kind"].get<std::string>();
    if (m["kind"] == "positive-dimensional") std::cout << " (dimension " << m["dimension"].get<int>() << ")";
    std::cout << "\n";
    for (const auto& p : m["points"]) {
      std::cout << "  (";
      for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? ", " : "") << p[i].get<std::string>();
      std::cout << ")\n";
    }
    if (!m["note"].get<std::string>().empty()) std::cout << "note: " << m["note"].get<std::string>() << "\n";
  }
  return inconclusive ? kInconclusive : kOk;
}

int run_determine(const std::string& path, bool as_json) {
  FormPtr form;
  if (int rc = load(path, form)) return rc;
  if (int rc = require_foliation(path, form.get())) return rc;
  json d;
  if (int rc = report(path, [&](char** t) { return folia_determine(form.get(), t); }, d)) return rc;
  d["input"] = path;
  if (as_json) {
    std::cout << d.dump(2) << "\n";
  } else {
    std::cout << d["verdict"].get<std::string>() << "\n";
    std::cout << "splitting type " << type_string(d["splitting_type"]) << "; " << d["reason"].get<std::string>()
              << "\n";
    if (d["witness"].is_string()) std::cout << "witness:\n" << d["witness"].get<std::string>();
  }
  return d["verdict"] == "inconclusive" ? kInconclusive : kOk;
}

int run_pullback(const std::string& path, bool as_json) {
  FormPtr form;
  if (int rc = load(path, form)) return rc;
  json p;
  if (int rc = report(path, [&](char** t) { return folia_pullback_structure(form.get(), t); }, p)) return rc;
  p["input"] = path;
  if (as_json) {
    std::cout << p.dump(2) << "\n";
  } else if (!p["found"].get<bool>()) {
    std::cout << "not a linear pull-back: " << p["diagnostic"].get<std::string>() << "\n";
  } else {
    std::cout << "ignored coordinate z" << p["ignored"].get<int>() << "\nchange of coordinates:\n";
    for (const auto& row : p["change"]) {
      std::cout << " ";
      for (const auto& e : row) std::cout << " " << e.get<std::string>();
      std::cout << "\n";
    }
    std::cout << "plane form:\n" << p["plane"].get<std::string>();
  }
  return kOk;
}

int run_engine(bool saturate, int vars, const std::string& gens) {
  json r;
  auto call = [&](char** t) {
    return saturate ? folia_saturate(vars, gens.c_str(), t) : folia_groebner(vars, gens.c_str(), t);
  };
  if (int rc = report("ideal", call, r)) return rc;
  std::cout << r.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"folia: singular schemes of codimension-one foliations on projective space"};
  app.require_subcommand(1);
  long budget = 0;
  app.add_option("--budget", budget, "Gröbner step budget (overrides FOLIA_STEP_BUDGET)");
  app.set_version_flag("--version", folia_version());

  std::string input;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "Validate a form and test integrability and codimension");
  check->add_option("file", input, "Form file")->required();
  check->add_flag("--json", as_json);

  std::vector<std::string> files;
  std::string dir;
  unsigned jobs = 0;
  auto* classify = app.add_subcommand("classify", "Classify the singular scheme and tangent sheaf");
  classify->add_option("files", files, "Form files");
  classify->add_option("--dir", dir, "Classify every .form file in a directory");
  classify->add_option("-j,--jobs", jobs, "Worker threads for --dir (default: all cores)");
  classify->add_flag("--json", as_json);

  auto* syz = app.add_subcommand("syzygies", "Linear and constant syzygies of the coefficients");
  syz->add_option("file", input)->required();
  syz->add_flag("--json", as_json);

  auto* family = app.add_subcommand("family", "Distributions with the same singular scheme");
  family->add_option("file", input)->required();
  family->add_flag("--json", as_json);

  auto* determine = app.add_subcommand("determine", "Is the foliation determined by its singular scheme");
  determine->add_option("file", input)->required();
  determine->add_flag("--json", as_json);

  auto* pullback = app.add_subcommand("pullback", "Recover a plane form from a constant syzygy");
  pullback->add_option("file", input)->required();
  pullback->add_flag("--json", as_json);

  std::string output, factors, weights, name, matrix;
  bool plane = false;
  int param = 2;
  auto* make = app.add_subcommand("make", "Construct forms");
  make->require_subcommand(1);
  auto* make_log = make->add_subcommand("logarithmic", "Logarithmic form from factors and weights");
  make_log->add_option("--factors", factors, "Comma-separated polynomials")->required();
  make_log->add_option("--weights", weights, "Comma-separated rationals")->required();
  make_log->add_flag("--plane", plane, "Factors live in z0..z2");
  auto* make_pb = make->add_subcommand("pullback", "Pull back a plane form by the projection from a point");
  make_pb->add_option("file", input, "Plane form file")->required();
  auto* make_exc = make->add_subcommand("exceptional", "Projective extension of the exceptional affine form");
  make_exc->add_option("--d", param, "Parameter d")->required();
  auto* make_tr = make->add_subcommand("transform", "Pull back by a linear change of coordinates");
  make_tr->add_option("file", input)->required();
  make_tr->add_option("--matrix", matrix, "Rows separated by ';', entries by ','")->required();
  for (auto* sub : {make_log, make_pb, make_exc, make_tr}) {
    sub->add_option("-o,--output", output, "Output file (default stdout)");
    sub->add_option("--name", name, "Name recorded in the file");
  }

  int vars = 4;
  std::string gens;
  auto* gb = app.add_subcommand("gb", "Gröbner basis, Hilbert series and Betti numbers of an ideal");
  auto* sat = app.add_subcommand("sat", "Saturation of an ideal by both algorithms");
  for (auto* sub : {gb, sat}) {
    sub->add_option("--vars", vars, "Number of variables z0..z_{n-1}");
    sub->add_option("--gens", gens, "Comma-separated generators")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }
  if (budget > 0) folia_set_step_budget(budget);

  if (*check) return run_check(input, as_json);
  if (*classify) return run_classify(files, dir, as_json, jobs);
  if (*syz) return run_syzygies(input, as_json);
  if (*family) return run_family(input, as_json);
  if (*determine) return run_determine(input, as_json);
  if (*pullback) return run_pullback(input, as_json);
  if (*gb) return run_engine(false, vars, gens);
  if (*sat) return run_engine(true, vars, gens);

  folia_form* raw = nullptr;
  folia_status s = FOLIA_OK;
  FormPtr source;
  if (*make_log) {
    s = folia_make_logarithmic(factors.c_str(), weights.c_str(), plane ? 1 : 0, &raw);
  } else if (*make_pb) {
    if (int rc = load(input, source)) return rc;
    s = folia_make_pullback(source.get(), &raw);
  } else if (*make_exc) {
    s = folia_make_exceptional(param, &raw);
  } else if (*make_tr) {
    if (int rc = load(input, source)) return rc;
    s = folia_apply_projectivity(source.get(), matrix.c_str(), &raw);
  }
  if (s != FOLIA_OK) return fail("make", s);
  FormPtr made(raw);
  if (!name.empty()) {
    // Names are metadata only; round-trip through the text format to attach one.
    char* text = nullptr;
    if ((s = folia_form_print(made.get(), &text)) != FOLIA_OK) return fail("make", s);
    std::string body = "name " + name + "\n" + text;
    folia_string_free(text);
    if ((s = folia_form_parse(body.c_str(), &raw)) != FOLIA_OK) return fail("make", s);
    made.reset(raw);
  }
  return write_form(made.get(), output);
}
