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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/forms.hpp"

namespace folia {

/// Text format for a 1-form:
///
///   # comment
///   name l1111
///   expected-degree 2
///   ring z0 z1 z2 z3
///   form (z1*z2*z3) dz0 + (z0*z2*z3) dz1
///     + (z0*z1*z3) dz2 - (3*z0*z1*z2) dz3
///
/// A statement runs until the next line that starts with a keyword. Terms are
/// `[<poly>] dz<i>`; polynomials use integers, p/q, z<i>, + - * ^ and parentheses.
struct FormFile {
  std::optional<std::string> name;
  std::optional<int> expected_degree;
  ProjectiveOneForm form;
};

/// Throws SyntaxError with line and column, or the validation error of the form.
FormFile parse_form_file(std::string_view text);
ProjectiveOneForm parse_form(std::string_view text);
FormFile load_form_file(const std::string& path);

/// Canonical text; parse_form_file(print_form_file(f)) reproduces f.
std::string print_form_file(const FormFile& file);
std::string print_form(const ProjectiveOneForm& form);

/// A polynomial expression in z0..z_{n-1}.
Polynomial parse_polynomial(const PolyRing& ring, std::string_view text);
/// Comma-separated polynomials; commas inside parentheses do not split.
std::vector<Polynomial> parse_polynomial_list(const PolyRing& ring, std::string_view text);
/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace folia
