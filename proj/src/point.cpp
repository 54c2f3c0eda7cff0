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

#include "cubicplane/point.hpp"

#include <stdexcept>

namespace cubicplane {

Point normalize(Point p) {
  int k = first_nonzero(p);
  if (k < 0) throw std::invalid_argument("zero vector is not a projective point");
  Scalar inv = p[k].inverse();
  for (auto& c : p) c *= inv;
  return p;
}

int first_nonzero(const Point& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) return static_cast<int>(i);
  return -1;
}

std::string point_to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ":";
    s += p[i].to_string();
  }
  return s + ")";
}

Point plane_c_to_p5(const Point& p) {
  Point out = p;
  for (int i = 0; i < 3; ++i) out.push_back(p[0].field().zero());
  return out;
}

Point plane_p_to_p5(const Point& p) {
  Point out(3, p[0].field().zero());
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

Point reduce_point_mod(const Point& p, std::uint32_t q) {
  if (!p[0].is_rational()) return normalize(p);
  // Primitive integer representative first, so the reduction is defined.
  mpz_class den = 1, content = 0;
  for (const auto& c : p) den = lcm(den, mpz_class(c.rational_value().get_den()));
  for (const auto& c : p) content = gcd(content, mpz_class(c.rational_value().get_num() * (den / c.rational_value().get_den())));
  Point out;
  for (const auto& c : p) {
    mpq_class v = c.rational_value() * den / content;
    out.push_back(Scalar::rational(v).reduce_mod(q));
  }
  return normalize(out);
}

}  // namespace cubicplane
