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

#ifndef CUBICPLANE_UNIVARIATE_HPP
#define CUBICPLANE_UNIVARIATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cubicplane/scalar.hpp"

namespace cubicplane {

/// Dense univariate polynomial, coefficients from low to high degree, with
/// no trailing zeros. The zero polynomial has degree -1.
class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(field) {}
  UniPoly(Field field, std::vector<Scalar> coeffs);

  static UniPoly constant(const Scalar& c);
  /// x - r
  static UniPoly linear_root(const Scalar& r);

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  Scalar lead() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Scalar& s);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly derivative() const;
  Scalar eval(const Scalar& x) const;
  UniPoly monic() const;
  UniPoly shift_up(int k) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Quotient when b divides a; throws ConsistencyError otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly square_free_part(const UniPoly& f);
/// a^e mod m.
UniPoly powmod(const UniPoly& a, std::uint64_t e, const UniPoly& m);

struct UniRoots {
  /// Distinct roots in the coefficient field, ascending, with multiplicity.
  std::vector<std::pair<Scalar, int>> roots;
  /// deg f minus the total multiplicity found: the part of f without roots
  /// in the coefficient field.
  int residual_degree = 0;
};

/// All roots of a nonzero polynomial in its coefficient field: Hensel
/// lifting plus rational reconstruction over Q, Cantor-Zassenhaus over F_q.
UniRoots field_roots(const UniPoly& f);

}  // namespace cubicplane

#endif  // CUBICPLANE_UNIVARIATE_HPP
