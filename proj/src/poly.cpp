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

#include "cubicplane/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cubicplane {

int var_count(VarSet vs) { return vs == VarSet::Ambient ? 6 : 3; }

std::string var_name(VarSet vs, int index) {
  static const char* plane[] = {"x1", "x2", "x3"};
  static const char* plane_u[] = {"u1", "u2", "u3"};
  static const char* ambient[] = {"x1", "x2", "x3", "u1", "u2", "u3"};
  if (index < 0 || index >= var_count(vs)) throw std::out_of_range("variable index");
  switch (vs) {
    case VarSet::Plane: return plane[index];
    case VarSet::PlaneU: return plane_u[index];
    case VarSet::Ambient: return ambient[index];
  }
  return {};
}

int var_index(VarSet vs, const std::string& name) {
  for (int i = 0; i < var_count(vs); ++i)
    if (var_name(vs, i) == name) return i;
  return -1;
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto k : e) d += k;
  return d;
}

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(Field field, VarSet vars, int degree)
    : field_(field), vars_(vars), degree_(degree) {}

MultiPoly MultiPoly::constant(const Scalar& c, VarSet vars) {
  MultiPoly p(c.field(), vars, 0);
  p.add_term(Exponent{}, c);
  return p;
}

MultiPoly MultiPoly::variable(Field field, VarSet vars, int index) {
  Exponent e{};
  e.at(static_cast<std::size_t>(index)) = 1;
  if (index >= var_count(vars)) throw std::out_of_range("variable index");
  return monomial(field.one(), vars, e);
}

MultiPoly MultiPoly::monomial(const Scalar& c, VarSet vars, const Exponent& e) {
  MultiPoly p(c.field(), vars, total_degree(e));
  p.add_term(e, c);
  return p;
}

Scalar MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.field() != field_) throw std::logic_error("coefficient from a different field");
  for (int i = nvars(); i < 6; ++i)
    if (e[i] != 0) throw std::invalid_argument("exponent outside the variable set");
  int d = total_degree(e);
  if (terms_.empty()) {
    degree_ = d;
  } else if (d != degree_) {
    throw std::invalid_argument("term of degree " + std::to_string(d) +
                                " added to a form of degree " + std::to_string(degree_));
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) throw std::invalid_argument("adding polynomials in different variables");
  if (o.field_ != field_) throw std::logic_error("adding polynomials over different fields");
  if (o.is_zero()) return *this;
  if (!is_zero() && o.degree_ != degree_)
    throw std::invalid_argument("adding forms of degree " + std::to_string(degree_) + " and " +
                                std::to_string(o.degree_));
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("multiplying polynomials in different variables");
  MultiPoly r(a.field_, a.vars_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (std::size_t i = 0; i < 6; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(field_.one(), vars_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= nvars()) throw std::out_of_range("derivative variable");
  MultiPoly r(field_, vars_, degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * field_.from_int(e[var]));
  }
  return r;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

void MultiPoly::check_arity(std::size_t n) const {
  if (n != static_cast<std::size_t>(nvars()))
    throw std::invalid_argument("point has " + std::to_string(n) + " coordinates, polynomial has " +
                                std::to_string(nvars()) + " variables");
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
  check_arity(point.size());
  for (const auto& c : point)
    if (c.field() != field_) throw std::logic_error("evaluation point over a different field");
  const int n = nvars();
  std::vector<std::vector<Scalar>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].push_back(field_.one());
    for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Scalar acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < n; ++i)
      if (e[i]) t *= powers[i][e[i]];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != static_cast<std::size_t>(nvars()))
    throw std::invalid_argument("substitute needs one image per variable");
  const VarSet target = images[0].vars();
  const int image_degree = images[0].degree();
  for (const auto& im : images)
    if (im.vars() != target || (!im.is_zero() && im.degree() != image_degree))
      throw std::invalid_argument("substitution images must share variables and degree");
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(constant(field_.one(), target));
    for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  MultiPoly r(field_, target, degree_ * image_degree);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(c, target);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (e[i]) t = t * powers[i][e[i]];
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::with_vars(VarSet target) const {
  if (target == vars_) return *this;
  int shift = 0;
  if (vars_ == VarSet::Ambient) {
    throw std::invalid_argument("cannot relabel ambient polynomial into a plane");
  } else if (target == VarSet::Ambient && vars_ == VarSet::PlaneU) {
    shift = 3;
  }
  MultiPoly r(field_, target, degree_);
  for (const auto& [e, c] : terms_) {
    Exponent m{};
    for (int i = 0; i < 3; ++i) m[i + shift] = e[i];
    r.add_term(m, c);
  }
  return r;
}

MultiPoly MultiPoly::reduce_mod(std::uint32_t q) const {
  Field fq = Field::prime(q);
  MultiPoly r(fq, vars_, degree_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.reduce_mod(q));
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c.is_rational() && sgn(c.rational_value()) < 0;
    Scalar mag = negative ? -c : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    bool is_const = total_degree(e) == 0;
    bool wrote = false;
    if (!mag.is_one() || is_const) {
      out << mag.to_string();
      wrote = true;
    }
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << var_name(vars_, i);
      if (e[i] > 1) out << '^' << static_cast<int>(e[i]);
      wrote = true;
    }
  }
  return out.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  if (n == 1) return m[0][0];
  const Field field = m[0][0].field();
  const VarSet vars = m[0][0].vars();
  MultiPoly det(field, vars, 0);
  bool have_degree = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][col] * poly_determinant(minor);
    if (col % 2 == 1) term = -term;
    if (!have_degree && !term.is_zero()) {
      det = MultiPoly(field, vars, term.degree());
      have_degree = true;
    }
    det += term;
  }
  return det;
}

}  // namespace cubicplane
