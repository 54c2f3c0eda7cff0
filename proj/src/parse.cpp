// Copyright 2026 The cubicplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cubicplane/parse.hpp"

#include <cctype>
#include <map>

#include "cubicplane/errors.hpp"

namespace cubicplane {

namespace {

// Intermediate values may be non-homogeneous; homogeneity is checked once at
// the end.
using Sparse = std::map<Exponent, Scalar>;

class Parser {
 public:
  Parser(std::string_view text, VarSet vars, Field field)
      : text_(text), vars_(vars), field_(field) {}

  Sparse parse() {
    Sparse r = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 0, static_cast<int>(pos_) + 1);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void add_into(Sparse& acc, const Sparse& t, bool negate) {
    for (const auto& [e, c] : t) {
      auto [it, inserted] = acc.try_emplace(e, negate ? -c : c);
      if (!inserted) {
        it->second += negate ? -c : c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }

  Sparse multiply(const Sparse& a, const Sparse& b) {
    Sparse r;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        Exponent e;
        for (std::size_t i = 0; i < 6; ++i) {
          int s = ea[i] + eb[i];
          if (s > 255) fail("exponent overflow");
          e[i] = static_cast<std::uint8_t>(s);
        }
        add_into(r, Sparse{{e, ca * cb}}, false);
      }
    return r;
  }

  Sparse expr() {
    Sparse acc;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    add_into(acc, term(), negate);
    while (true) {
      if (accept('+'))
        add_into(acc, term(), false);
      else if (accept('-'))
        add_into(acc, term(), true);
      else
        return acc;
    }
  }

  Sparse term() {
    Sparse acc = factor();
    while (accept('*')) acc = multiply(acc, factor());
    skip_ws();
    if (pos_ < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
      fail("implicit multiplication is not allowed; use '*'");
    return acc;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Sparse factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Scalar value = field_.from_rational(mpq_class(num, den));
      Sparse r;
      if (!value.is_zero()) r.emplace(Exponent{}, value);
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = var_index(vars_, name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      unsigned power = 1;
      if (accept('^')) {
        std::size_t at = pos_;
        mpz_class p = integer();
        if (p <= 0 || p > 255) {
          pos_ = at;
          fail("exponent must be a positive integer below 256");
        }
        power = static_cast<unsigned>(p.get_ui());
      }
      Exponent e{};
      e[idx] = static_cast<std::uint8_t>(power);
      return Sparse{{e, field_.one()}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  VarSet vars_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, VarSet vars, Field field) {
  Parser parser(text, vars, field);
  Sparse terms;
  try {
    terms = parser.parse();
  } catch (const std::domain_error& e) {
    throw ParseError(e.what(), 0, 1);
  }
  if (terms.empty()) return MultiPoly(field, vars, 0);
  const int degree = total_degree(terms.begin()->first);
  MultiPoly p(field, vars, degree);
  for (const auto& [e, c] : terms) {
    if (total_degree(e) != degree)
      throw ParseError("polynomial is not homogeneous (terms of degree " + std::to_string(degree) +
                           " and " + std::to_string(total_degree(e)) + ")",
                       0, 1);
    p.add_term(e, c);
  }
  return p;
}

}  // namespace cubicplane
