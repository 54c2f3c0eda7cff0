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

// Small helpers shared by the unit tests.

#ifndef CUBICPLANE_TESTS_SUPPORT_HPP
#define CUBICPLANE_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "cubicplane/detrep.hpp"
#include "cubicplane/parse.hpp"
#include "cubicplane/point.hpp"

namespace testing {

using namespace cubicplane;

inline const Field QQ = Field::rationals();

inline MultiPoly px(const std::string& s, Field f = QQ) { return parse_poly(s, VarSet::Plane, f); }
inline MultiPoly pa(const std::string& s, Field f = QQ) { return parse_poly(s, VarSet::Ambient, f); }

inline Point pt(std::vector<long> c, Field f = QQ) {
  Point p;
  for (long v : c) p.push_back(f.from_int(v));
  return p;
}

inline Point qpt(std::vector<mpq_class> c) {
  Point p;
  for (auto& v : c) p.push_back(QQ.from_rational(v));
  return p;
}

inline PolyMatrix4 zero_matrix(Field f) {
  const MultiPoly z(f, VarSet::Plane, 0);
  return PolyMatrix4{{{z, z, z, z}, {z, z, z, z}, {z, z, z, z}, {z, z, z, z}}};
}

inline SymDetRep rep_from(const std::vector<std::vector<std::string>>& rows, Field f = QQ) {
  PolyMatrix4 m = zero_matrix(f);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = px(rows[i][j], f);
  return SymDetRep::validate(m);
}

// Random homogeneous form of the given degree in x1..x3 with small integer
// coefficients.
inline MultiPoly random_form(std::mt19937& g, int degree, Field f, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  MultiPoly out(f, VarSet::Plane, degree);
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b) {
      Exponent e{};
      e[0] = static_cast<std::uint8_t>(a);
      e[1] = static_cast<std::uint8_t>(b);
      e[2] = static_cast<std::uint8_t>(degree - a - b);
      out += MultiPoly::monomial(f.from_int(d(g)), VarSet::Plane, e);
    }
  return out;
}

// Random symmetric representation with nonzero determinant.
inline SymDetRep random_rep(std::mt19937& g, Field f) {
  for (;;) {
    PolyMatrix4 m = zero_matrix(f);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        m[i][j] = random_form(g, SymDetRep::profile_degree(i, j), f);
        m[j][i] = m[i][j];
      }
    try {
      return SymDetRep::validate(m);
    } catch (const MathRejection&) {
    }
  }
}

}  // namespace testing

#endif  // CUBICPLANE_TESTS_SUPPORT_HPP
