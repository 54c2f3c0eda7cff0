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

#ifndef CUBICPLANE_QUADEXT_HPP
#define CUBICPLANE_QUADEXT_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "cubicplane/scalar.hpp"

namespace cubicplane {

template <class F>
struct Quad;
template <class F>
bool is_zero(const Quad<F>& x);
template <class F>
Quad<F> zero_like(const Quad<F>& x);
template <class F>
Quad<F> one_like(const Quad<F>& x);

/// a + b*sqrt(d) over a base field F, with d a fixed non-square of F.
/// Nesting Quad<Quad<Scalar>> gives biquadratic fields.
template <class F>
struct Quad {
  F a;
  F b;
  F d;

  Quad(F a_, F b_, F d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}

  static Quad sqrt_of(const F& d) { return Quad(zero_like(d), one_like(d), d); }

  bool is_zero() const { return cubicplane::is_zero(a) && cubicplane::is_zero(b); }

  Quad operator-() const { return Quad(-a, -b, d); }
  friend Quad operator+(const Quad& x, const Quad& y) { return Quad(x.a + y.a, x.b + y.b, x.d); }
  friend Quad operator-(const Quad& x, const Quad& y) { return Quad(x.a - y.a, x.b - y.b, x.d); }
  friend Quad operator*(const Quad& x, const Quad& y) {
    return Quad(x.a * y.a + x.d * x.b * y.b, x.a * y.b + x.b * y.a, x.d);
  }
  Quad inverse() const {
    F norm = a * a - d * b * b;
    if (cubicplane::is_zero(norm)) throw std::domain_error("division by zero in quadratic extension");
    F inv = norm.inverse();
    return Quad(a * inv, -(b * inv), d);
  }
  friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inverse(); }
  friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }
};

template <class F>
bool is_zero(const Quad<F>& x) {
  return x.is_zero();
}
template <class F>
Quad<F> zero_like(const Quad<F>& x) {
  return Quad<F>(zero_like(x.a), zero_like(x.a), x.d);
}
template <class F>
Quad<F> one_like(const Quad<F>& x) {
  return Quad<F>(one_like(x.a), zero_like(x.a), x.d);
}
template <class F>
Quad<F> lift_to(const Scalar& s, const Quad<F>& proto) {
  return Quad<F>(lift_to(s, proto.a), zero_like(proto.a), proto.d);
}
template <class F>
std::string to_string(const Quad<F>& x) {
  using cubicplane::to_string;
  if (is_zero(x.b)) return to_string(x.a);
  std::string s = is_zero(x.a) ? "" : to_string(x.a) + "+";
  return s + "(" + to_string(x.b) + ")*sqrt(" + to_string(x.d) + ")";
}

using QuadScalar = Quad<Scalar>;

}  // namespace cubicplane

#endif  // CUBICPLANE_QUADEXT_HPP
