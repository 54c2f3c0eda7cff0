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

#include <random>

#include "cubicplane/errors.hpp"
#include "cubicplane/linalg.hpp"
#include "cubicplane/parse.hpp"
#include "cubicplane/quadext.hpp"
#include "cubicplane/solve.hpp"
#include "cubicplane/univariate.hpp"
#include "doctest.h"

using namespace cubicplane;

namespace {

const Field QQ = Field::rationals();

MultiPoly px(const char* s, Field f = QQ) { return parse_poly(s, VarSet::Plane, f); }

Scalar q(long n, long d = 1) { return Scalar::rational(mpq_class(n, d)); }

Point pt(long a, long b, long c, Field f = QQ) { return {f.from_int(a), f.from_int(b), f.from_int(c)}; }

// Sylvester determinant of two univariate polynomials by plain Gaussian
// elimination, for cross-checking the Bareiss resultant at sample points.
Scalar sylvester_scalar(const UniPoly& f, const UniPoly& g) {
  const int m = f.degree(), n = g.degree();
  const Field fld = f.field();
  ScalarMatrix s(m + n, m + n, fld.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = g.coeff(n - j);
  return determinant(s);
}

UniPoly in_x1(const MultiPoly& f, const Scalar& x2, const Scalar& x3) {
  std::vector<Scalar> c(f.degree() + 1, f.field().zero());
  for (const auto& [e, v] : f.terms()) c[e[0]] += v * x2.pow(e[1]) * x3.pow(e[2]);
  return UniPoly(f.field(), c);
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_q") {
  CHECK((q(1, 2) + q(1, 3)) == q(5, 6));
  CHECK(q(9, 4).sqrt().value() == q(3, 2));
  CHECK_FALSE(q(2).is_square());
  Field f13 = Field::prime(13);
  CHECK(f13.from_int(-1).is_square());  // 13 = 1 mod 4
  Scalar r = f13.from_int(-1).sqrt().value();
  CHECK(r * r == f13.from_int(-1));
  CHECK(f13.from_rational(mpq_class(1, 2)) * f13.from_int(2) == f13.one());
  CHECK_THROWS_AS(f13.zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(Field::prime(15), std::invalid_argument);
  CHECK_THROWS_AS(q(1) + f13.one(), std::logic_error);
}

TEST_CASE("parser round trip and errors") {
  MultiPoly f = px("x1^2*x3 - 3/2*x2^3 + (x1 + x2)*(x1 - x2)*x3");
  CHECK(f.degree() == 3);
  CHECK(px(f.to_string().c_str()) == f);
  CHECK(px("-x1 + x2").to_string() == "-x1 + x2");
  CHECK_THROWS_AS(px("x1 + x2^2"), ParseError);
  CHECK_THROWS_AS(px("2x1"), ParseError);
  CHECK_THROWS_AS(px("x1/0"), ParseError);
  try {
    px("x1 + y2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
}

TEST_CASE("rational roots with multiplicities") {
  // (2t - 1)(t + 3)^2 (t^2 + 1)
  UniPoly t(QQ, {q(0), q(1)});
  UniPoly f = (t * q(2) - UniPoly::constant(q(1))) * (t + UniPoly::constant(q(3))) *
              (t + UniPoly::constant(q(3))) * (t * t + UniPoly::constant(q(1)));
  UniRoots r = field_roots(f);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == std::pair<Scalar, int>{q(-3), 2});
  CHECK(r.roots[1] == std::pair<Scalar, int>{q(1, 2), 1});
  CHECK(r.residual_degree == 2);

  // Large roots need several Hensel steps.
  UniPoly g = (t - UniPoly::constant(q(123456789, 1000))) * (t * t * q(7) - UniPoly::constant(q(3))) * t;
  UniRoots rg = field_roots(g);
  REQUIRE(rg.roots.size() == 2);
  CHECK(rg.roots[0].first == q(0));
  CHECK(rg.roots[1].first == q(123456789, 1000));
  CHECK(rg.residual_degree == 2);
}

TEST_CASE("finite field roots agree with exhaustive search") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {7u, 13u, 101u, 1009u}) {
    Field f = Field::prime(p);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Scalar> c;
      for (int i = 0; i < 8; ++i) c.push_back(f.from_int(rng() % p));
      c.push_back(f.one());
      UniPoly u(f, c);
      UniRoots r = field_roots(u);
      std::vector<Scalar> brute;
      for (std::uint32_t v = 0; v < p; ++v)
        if (u.eval(f.from_int(v)).is_zero()) brute.push_back(f.from_int(v));
      REQUIRE(r.roots.size() == brute.size());
      for (std::size_t i = 0; i < brute.size(); ++i) CHECK(r.roots[i].first == brute[i]);
    }
  }
}

TEST_CASE("resultant matches scalar Sylvester determinants") {
  MultiPoly f = px("x1^3 + 2*x1*x2*x3 - x2^2*x3 + x3^3");
  MultiPoly g = px("x1^2*x2 - x1*x3^2 + 5*x2^3 - x3^3");
  MultiPoly r = resultant(f, g, 0);
  CHECK(r.degree() == 9);
  for (long a : {1, 2, -3})
    for (long b : {0, 1, 4}) {
      Point v = {q(0), q(a), q(b)};
      CHECK(r.eval(v) == sylvester_scalar(in_x1(f, q(a), q(b)), in_x1(g, q(a), q(b))));
    }
  CHECK(resultant(px("x1^2 - x2^2"), px("x1 - x3"), 0) == px("-x2^2 + x3^2"));
  CHECK_THROWS_AS(resultant(px("x2"), px("x3"), 0), DegenerateResultant);
}

TEST_CASE("common zeros of conics and of gradients") {
  // Four points (1:1:1), (1:-1:1), (1:1:-1), (1:-1:-1).
  ZeroSet z = common_zeros({px("x1^2 - x2^2"), px("x1^2 - x3^2")});
  CHECK(z.complete);
  REQUIRE(z.points.size() == 4);
  for (const auto& p : z.points) CHECK(p[0] == q(1));

  // Nodal cubic: the gradient vanishes only at (0:0:1).
  MultiPoly c = px("x2^2*x3 - x1^3 - x1^2*x3");
  ZeroSet s = common_zeros({c.derivative(0), c.derivative(1), c.derivative(2)});
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0] == pt(0, 0, 1));

  // Irrational solutions are flagged.
  ZeroSet irr = common_zeros({px("x1^2 - 2*x3^2"), px("x2*x3")});
  REQUIRE(irr.points.size() == 1);
  CHECK(irr.points[0] == pt(0, 1, 0));
  CHECK_FALSE(irr.complete);

  CHECK_THROWS_AS(common_zeros({px("x1*x2"), px("x1*x3")}), PositiveDimensional);
}

TEST_CASE("common zeros over F_q agree with point enumeration") {
  Field f = Field::prime(11);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<MultiPoly> forms;
    for (int k = 0; k < 3; ++k) {
      MultiPoly p(f, VarSet::Plane, 2);
      for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j) p.add_term(Exponent{std::uint8_t(i), std::uint8_t(j), std::uint8_t(2 - i - j)}, f.from_int(rng() % 11));
      forms.push_back(p);
    }
    // Force a common point at (1:2:3).
    Point target = pt(1, 2, 3, f);
    for (auto& p : forms) {
      Scalar v = p.eval(target);
      p -= MultiPoly::variable(f, VarSet::Plane, 0).pow(2) * v;
    }
    std::vector<Point> brute;
    for (const auto& p : plane_points(f)) {
      bool all = true;
      for (const auto& g : forms) all = all && g.eval(p).is_zero();
      if (all) brute.push_back(p);
    }
    try {
      ZeroSet z = common_zeros(forms);
      CHECK(z.points == brute);
    } catch (const PositiveDimensional&) {
      // Rare degenerate draw; nothing to compare.
    }
  }
}

TEST_CASE("square-free test") {
  CHECK(is_square_free(px("x1^3 + x2^3 + x3^3")));
  CHECK(is_square_free(px("x1^2*x3 + x1*x2^2")));
  CHECK_FALSE(is_square_free(px("x1^2*x2")));
  CHECK_FALSE(is_square_free(px("(x1 + x2 - x3)*(x1 + x2 - x3)*(x1^2 + x2^2 + x3^2)")));
  Field f7 = Field::prime(7);
  CHECK(is_square_free(px("x1*x2*x3*(x1 + x2 + x3)*(x1^2 + x2^2 + x3^2)", f7)));
  CHECK_FALSE(is_square_free(px("x1*x1*x3*(x1 + x2 + x3)*(x1^2 + x2^2 + x3^2)", f7)));
}

TEST_CASE("quadratic extension arithmetic") {
  QuadScalar s = QuadScalar::sqrt_of(q(2));
  CHECK(s * s == lift_to(q(2), s));
  QuadScalar x(q(1), q(3), q(2));
  CHECK(x * x.inverse() == one_like(x));
  Matrix<QuadScalar> m = Matrix<QuadScalar>::from_rows({{s, lift_to(q(2), s)}, {lift_to(q(1), s), s}});
  CHECK(rank(m) == 1);
}
