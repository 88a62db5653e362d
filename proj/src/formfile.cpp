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

#include "folia/formfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "folia/error.hpp"

namespace folia {

namespace {

enum class Tok { number, ident, op, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

struct Segment {
  int line;
  int col;  // 1-based column of text[0]
  std::string text;
};

std::vector<Token> lex(const std::vector<Segment>& segments, int end_line, int end_col) {
  std::vector<Token> out;
  for (const auto& seg : segments) {
    const std::string& s = seg.text;
    std::size_t i = 0;
    while (i < s.size()) {
      const int col = seg.col + static_cast<int>(i);
      const char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        out.push_back({Tok::number, s.substr(i, j - i), seg.line, col});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        out.push_back({Tok::ident, s.substr(i, j - i), seg.line, col});
        i = j;
      } else if (std::string_view("+-*^/(),").find(c) != std::string_view::npos) {
        out.push_back({Tok::op, std::string(1, c), seg.line, col});
        ++i;
      } else {
        throw SyntaxError(seg.line, col, std::string("unexpected character '") + c + "'");
      }
    }
  }
  out.push_back({Tok::end, "", end_line, end_col});
  return out;
}

// Index encoded in z<i> or dz<i>, or -1.
int index_after(const std::string& ident, std::size_t prefix) {
  if (ident.size() <= prefix) return -1;
  for (std::size_t i = prefix; i < ident.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return -1;
  }
  if (ident.size() > prefix + 1 && ident[prefix] == '0') return -1;
  try {
    return std::stoi(ident.substr(prefix));
  } catch (const std::out_of_range&) {
    return -1;
  }
}

int var_index(const std::string& ident) { return ident.rfind('z', 0) == 0 ? index_after(ident, 1) : -1; }
int dz_index(const std::string& ident) { return ident.rfind("dz", 0) == 0 ? index_after(ident, 2) : -1; }

class Parser {
 public:
  Parser(const PolyRing& ring, std::vector<Token> toks) : ring_(ring), toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool at_op(char c) const { return peek().kind == Tok::op && peek().text[0] == c; }
  bool at_end() const { return peek().kind == Tok::end; }
  bool at_dz() const { return peek().kind == Tok::ident && dz_index(peek().text) >= 0; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw SyntaxError(t.line, t.col, msg); }

  Polynomial expr(bool allow_sign) {
    bool negate = false;
    if (allow_sign && (at_op('+') || at_op('-'))) negate = next().text[0] == '-';
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (at_op('+') || at_op('-')) {
      const bool minus = next().text[0] == '-';
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (at_op('*')) {
        next();
        acc = acc * factor();
      } else if (at_op('/')) {
        next();
        const Token t = next();
        if (t.kind != Tok::number) fail(t, "expected an integer after '/'");
        Integer den(t.text);
        if (den == 0) fail(t, "division by zero");
        acc = acc * Rational(Integer(1), den);
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (at_op('^')) {
      next();
      const Token t = next();
      if (t.kind != Tok::number) fail(t, "expected an exponent");
      if (t.text.size() > 4) fail(t, "exponent too large");
      base = base.pow(std::stoi(t.text));
    }
    return base;
  }

  Polynomial primary() {
    const Token t = next();
    switch (t.kind) {
      case Tok::number:
        return Polynomial::constant(ring_, Rational(Integer(t.text)));
      case Tok::ident: {
        const int v = var_index(t.text);
        if (v < 0) fail(t, "unknown identifier '" + t.text + "'");
        if (v >= ring_.num_vars()) fail(t, "variable " + t.text + " is not in the ring");
        return Polynomial::variable(ring_, v);
      }
      case Tok::op:
        if (t.text == "(") {
          Polynomial inner = expr(true);
          if (!at_op(')')) fail(peek(), "expected ')'");
          next();
          return inner;
        }
        if (t.text == "-") return -factor();
        fail(t, "unexpected '" + t.text + "'");
      case Tok::end:
        break;
    }
    fail(t, "unexpected end of input");
  }

  std::vector<Polynomial> form_terms() {
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(ring_.num_vars()), Polynomial(ring_));
    bool first = true;
    while (!at_end()) {
      bool minus = false;
      if (at_op('+') || at_op('-')) {
        minus = next().text[0] == '-';
      } else if (!first) {
        fail(peek(), "expected '+' or '-' between terms");
      }
      Polynomial c = at_dz() ? Polynomial::constant(ring_, 1) : expr(false);
      const Token d = next();
      if (d.kind != Tok::ident || dz_index(d.text) < 0) fail(d, "expected dz<i>");
      const int i = dz_index(d.text);
      if (i >= ring_.num_vars()) fail(d, d.text + " is not in the ring");
      coeffs[static_cast<std::size_t>(i)] += minus ? -c : c;
      first = false;
    }
    if (first) fail(peek(), "empty form");
    return coeffs;
  }

 private:
  const PolyRing& ring_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct Statement {
  std::string keyword;
  int line;
  int col;
  std::vector<Segment> body;
};

std::vector<Statement> split_statements(std::string_view text) {
  static const std::vector<std::string> keywords{"ring", "form", "name", "expected-degree"};
  std::vector<Statement> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::size_t start = raw.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::size_t word_end = raw.find_first_of(" \t", start);
    std::string word = raw.substr(start, word_end == std::string::npos ? std::string::npos : word_end - start);
    const bool is_keyword = std::find(keywords.begin(), keywords.end(), word) != keywords.end();
    if (is_keyword) {
      Statement s{word, line, static_cast<int>(start) + 1, {}};
      if (word_end != std::string::npos) {
        s.body.push_back({line, static_cast<int>(word_end) + 1, raw.substr(word_end)});
      }
      out.push_back(std::move(s));
    } else {
      if (out.empty() || out.back().keyword != "form") {
        throw SyntaxError(line, static_cast<int>(start) + 1, "expected a statement keyword, found '" + word + "'");
      }
      out.back().body.push_back({line, 1, raw});
    }
  }
  return out;
}

std::string joined(const Statement& s) {
  std::string out;
  for (const auto& seg : s.body) out += seg.text;
  auto b = out.find_first_not_of(" \t");
  auto e = out.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : out.substr(b, e - b + 1);
}

int line_end_col(const Statement& s) {
  if (s.body.empty()) return s.col + static_cast<int>(s.keyword.size());
  return s.body.back().col + static_cast<int>(s.body.back().text.size());
}

}  // namespace

FormFile parse_form_file(std::string_view text) {
  std::optional<PolyRing> ring;
  std::optional<std::string> name;
  std::optional<int> expected;
  std::optional<std::vector<Polynomial>> coeffs;
  for (const auto& st : split_statements(text)) {
    const int last_line = st.body.empty() ? st.line : st.body.back().line;
    if (st.keyword == "ring") {
      if (ring) throw SyntaxError(st.line, st.col, "ring declared twice");
      auto toks = lex(st.body, last_line, line_end_col(st));
      int n = 0;
      for (const auto& t : toks) {
        if (t.kind == Tok::end) break;
        if (t.kind != Tok::ident || var_index(t.text) != n) {
          throw SyntaxError(t.line, t.col, "expected variable z" + std::to_string(n));
        }
        ++n;
      }
      if (n < 2 || n > kMaxVars) throw SyntaxError(st.line, st.col, "ring needs between 2 and 12 variables");
      ring = PolyRing(n);
    } else if (st.keyword == "name") {
      if (name) throw SyntaxError(st.line, st.col, "name given twice");
      name = joined(st);
      if (name->empty()) throw SyntaxError(st.line, line_end_col(st), "empty name");
    } else if (st.keyword == "expected-degree") {
      if (expected) throw SyntaxError(st.line, st.col, "expected-degree given twice");
      auto toks = lex(st.body, last_line, line_end_col(st));
      if (toks.size() != 2 || toks[0].kind != Tok::number || toks[0].text.size() > 6) {
        throw SyntaxError(toks[0].line, toks[0].col, "expected a non-negative integer");
      }
      expected = std::stoi(toks[0].text);
    } else {
      if (!ring) throw SyntaxError(st.line, st.col, "form before ring declaration");
      if (coeffs) throw SyntaxError(st.line, st.col, "form given twice");
      Parser p(*ring, lex(st.body, last_line, line_end_col(st)));
      coeffs = p.form_terms();
    }
  }
  if (!coeffs) throw SyntaxError(1, 1, "no form statement");
  FormFile out{name, expected, ProjectiveOneForm::validate(std::move(*coeffs))};
  if (expected && *expected != out.form.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "expected-degree " + std::to_string(*expected) +
                                               " but the form has degree " + std::to_string(out.form.degree()));
  }
  return out;
}

ProjectiveOneForm parse_form(std::string_view text) { return parse_form_file(text).form; }

FormFile load_form_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_form_file(buf.str());
}

std::string print_form(const ProjectiveOneForm& form) {
  std::string out = "ring";
  for (int i = 0; i < form.num_vars(); ++i) out += " z" + std::to_string(i);
  out += "\nform";
  bool first = true;
  for (int i = 0; i < form.num_vars(); ++i) {
    const Polynomial& c = form[i];
    if (c.is_zero()) continue;
    const std::string dz = ") dz" + std::to_string(i);
    if (first) {
      out += " (" + c.to_string() + dz;
    } else if (c.leading().coef < 0) {
      out += " - (" + (-c).to_string() + dz;
    } else {
      out += " + (" + c.to_string() + dz;
    }
    first = false;
  }
  return out + "\n";
}

std::string print_form_file(const FormFile& file) {
  std::string out;
  if (file.name) out += "name " + *file.name + "\n";
  if (file.expected_degree) out += "expected-degree " + std::to_string(*file.expected_degree) + "\n";
  return out + print_form(file.form);
}

Polynomial parse_polynomial(const PolyRing& ring, std::string_view text) {
  Parser p(ring, lex({{1, 1, std::string(text)}}, 1, static_cast<int>(text.size()) + 1));
  Polynomial out = p.expr(true);
  if (!p.at_end()) p.fail(p.peek(), "unexpected trailing input");
  return out;
}

std::vector<Polynomial> parse_polynomial_list(const PolyRing& ring, std::string_view text) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      try {
        out.push_back(parse_polynomial(ring, text.substr(start, i - start)));
      } catch (const SyntaxError& e) {
        throw SyntaxError(1, static_cast<int>(start) + e.column(), e.detail());
      }
      start = i + 1;
    }
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') continue;
    std::string item(text.substr(start, i - start));
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw SyntaxError(1, static_cast<int>(start) + 1, "empty number");
    item = item.substr(b, e - b + 1);
    Rational q;
    try {
      q = Rational(item);
    } catch (const std::invalid_argument&) {
      throw SyntaxError(1, static_cast<int>(start + b) + 1, "not a rational number: '" + item + "'");
    }
    if (q.get_den() == 0) throw SyntaxError(1, static_cast<int>(start + b) + 1, "zero denominator");
    q.canonicalize();
    out.push_back(q);
    start = i + 1;
  }
  return out;
}

}  // namespace folia
