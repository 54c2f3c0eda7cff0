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

#ifndef CUBICPLANE_POLY_HPP
#define CUBICPLANE_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cubicplane/scalar.hpp"

namespace cubicplane {

/// Variable sets used throughout: the plane Pi(C) with x1..x3, the plane P
/// with u1..u3, and the ambient P^5 with x1..x3,u1..u3.
enum class VarSet { Plane, PlaneU, Ambient };

int var_count(VarSet vs);
std::string var_name(VarSet vs, int index);
/// Index of `name` in `vs`, or -1.
int var_index(VarSet vs, const std::string& name);

using Exponent = std::array<std::uint8_t, 6>;

int total_degree(const Exponent& e);

/// Graded-lex, largest first. All terms of a form share a total degree, so
/// in practice this is lex with x1 > x2 > ... .
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse homogeneous polynomial over a Field. No zero coefficients are
/// stored and every stored exponent has total degree degree(). The zero
/// polynomial carries a nominal degree and is compatible with any degree.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, GradedLexGreater>;

  MultiPoly(Field field, VarSet vars, int degree);

  static MultiPoly constant(const Scalar& c, VarSet vars);
  static MultiPoly variable(Field field, VarSet vars, int index);
  static MultiPoly monomial(const Scalar& c, VarSet vars, const Exponent& e);

  Field field() const { return field_; }
  VarSet vars() const { return vars_; }
  int nvars() const { return var_count(vars_); }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Scalar coefficient(const Exponent& e) const;
  /// Adds c * x^e. Throws std::invalid_argument on a degree mismatch.
  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(int var) const;

  int degree_in(int var) const;
  bool involves(int var) const { return degree_in(var) > 0; }

  /// Value at an affine representative. Throws std::invalid_argument on a
  /// coordinate-count mismatch.
  Scalar eval(std::span<const Scalar> point) const;

  /// Evaluation in an extension field. `lift` maps a coefficient into the
  /// coordinate type.
  template <class F, class Lift>
  F eval_as(std::span<const F> point, Lift lift) const {
    check_arity(point.size());
    F zero = point[0] - point[0];
    F acc = zero;
    for (const auto& [e, c] : terms_) {
      F term = lift(c);
      for (int i = 0; i < nvars(); ++i)
        for (int k = 0; k < e[i]; ++k) term = term * point[i];
      acc = acc + term;
    }
    return acc;
  }

  /// Composition f(images[0], ..., images[n-1]). All images must share a
  /// variable set and a degree.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Relabels into another variable set: Plane<->PlaneU keep indices,
  /// Plane->Ambient keeps x-indices, PlaneU->Ambient shifts to the u slots.
  MultiPoly with_vars(VarSet target) const;

  MultiPoly reduce_mod(std::uint32_t q) const;

  /// Canonical text, accepted back by parse_poly.
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_arity(std::size_t n) const;

  Field field_;
  VarSet vars_;
  int degree_;
  TermMap terms_;
};

/// Exact determinant of a square matrix of forms by cofactor expansion.
MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m);

}  // namespace cubicplane

#endif  // CUBICPLANE_POLY_HPP
