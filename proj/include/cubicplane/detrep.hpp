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

#ifndef CUBICPLANE_DETREP_HPP
#define CUBICPLANE_DETREP_HPP

#include <array>

#include "cubicplane/linalg.hpp"
#include "cubicplane/point.hpp"
#include "cubicplane/poly.hpp"

namespace cubicplane {

using PolyMatrix4 = std::array<std::array<MultiPoly, 4>, 4>;

/// Symmetric 4x4 matrix of forms in x1..x3 with degree profile
///
///   l l l q
///   l l l q
///   l l l q
///   q q q f
///
/// (degrees 1, 2, 3) and nonzero determinant.
class SymDetRep {
 public:
  /// Throws MathRejection for asymmetry, a wrong degree profile, or a
  /// vanishing determinant, naming the offending entry.
  static SymDetRep validate(const PolyMatrix4& m);

  Field field() const { return m_[0][0].field(); }
  const MultiPoly& entry(int i, int j) const { return m_[i][j]; }
  const PolyMatrix4& matrix() const { return m_; }

  /// The same matrix with coefficients reduced mod q (revalidated).
  SymDetRep reduce_mod(std::uint32_t q) const;

  /// Expected degree of entry (i, j): 1, 2 or 3.
  static int profile_degree(int i, int j);

 private:
  explicit SymDetRep(PolyMatrix4 m) : m_(std::move(m)) {}
  PolyMatrix4 m_;
};

struct DerivedEquations {
  MultiPoly sextic;    // det M
  MultiPoly d_cubic;   // det of the upper-left 3x3 block G
  MultiPoly fourfold;  // F in x1..x3, u1..u3
};

DerivedEquations derived_equations(const SymDetRep& rep);

/// M evaluated at p, the Gram matrix of the fiber quadric in (u1, u2, u3, t).
/// Throws MathRejection if the rank is at most 1.
ScalarMatrix fiber_gram(const SymDetRep& rep, const Point& p);

/// Gram matrix of u^T G(e_k) u, the k-th generator of the net of conics.
ScalarMatrix net_generator(const SymDetRep& rep, int k);

}  // namespace cubicplane

#endif  // CUBICPLANE_DETREP_HPP
