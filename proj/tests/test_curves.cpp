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

#include <algorithm>
#include <set>

#include "cubicplane/curves.hpp"
#include "cubicplane/errors.hpp"
#include "cubicplane/examples.hpp"
#include "cubicplane/linalg.hpp"
#include "cubicplane/solve.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// Intersection of two lines given by coefficient vectors: the cross product.
Point meet(const std::vector<long>& a, const std::vector<long>& b) {
  return normalize(pt({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}));
}

const std::vector<std::vector<long>> kSixLines = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, 3, 2}};

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool contains(const std::vector<Point>& v, const Point& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

TEST_CASE("singular points of the six lines are the fifteen pairwise meets") {
  std::vector<Point> expected;
  for (std::size_t i = 0; i < kSixLines.size(); ++i)
    for (std::size_t j = i + 1; j < kSixLines.size(); ++j) expected.push_back(meet(kSixLines[i], kSixLines[j]));
  DerivedEquations eq = derived_equations(build_example("ex42ii").rep);
  SingularPoints s = singular_points(eq.sextic);
  CHECK(s.complete);
  CHECK(sorted(s.points) == sorted(expected));
  CHECK(s.points.size() == 15);
  CHECK(contains(s.points, pt({0, 0, 1})));
  CHECK(contains(s.points, pt({1, -2, 1})));
  CHECK(contains(s.points, pt({1, 1, -2})));
  CHECK(contains(s.points, normalize(pt({-5, 1, 1}))));

  std::vector<MultiPoly> lines;
  for (const auto& l : kSixLines)
    lines.push_back(px(std::to_string(l[0]) + "*x1 + " + std::to_string(l[1]) + "*x2 + " + std::to_string(l[2]) + "*x3"));
  SingularPoints f = singular_points_factored(lines);
  CHECK(f.complete);
  CHECK(sorted(f.points) == sorted(expected));
}

TEST_CASE("singular points of small curves") {
  SingularPoints nodal = singular_points(px("x2^2*x3 - x1^3 + x1^2*x3"));
  CHECK(nodal.complete);
  CHECK(nodal.points == std::vector<Point>{pt({0, 0, 1})});
  SingularPoints fermat = singular_points(px("x1^6 + x2^6 + x3^6", Field::prime(7)));
  CHECK(fermat.points.empty());
  CHECK(fermat.complete);
  CHECK_THROWS_AS(singular_points(px("x1^2*x2*x3*(x1 + x2 + x3)*(x1 - x3)")), MathRejection);
}

TEST_CASE("node certification") {
  CHECK(is_node(px("x2^2*x3 - x1^3 + x1^2*x3"), pt({0, 0, 1})));
  CHECK_FALSE(is_node(px("x2^2*x3 - x1^3"), pt({0, 0, 1})));
  CHECK(is_node(px("x1*x2"), pt({0, 0, 1})));
  CHECK_THROWS_AS(is_node(px("x1*x2"), pt({1, 0, 0})), std::invalid_argument);
  // Tacnode: two conics tangent at (0:0:1).
  CHECK_FALSE(is_node(px("(x2*x3 - x1^2)*(x2*x3 - 2*x1^2)"), pt({0, 0, 1})));
}

TEST_CASE("classification of the six-line example") {
  SymDetRep r = build_example("ex42ii").rep;
  SingClassification sc = classify_singularities(r, derived_equations(r));
  CHECK(sc.complete);
  CHECK(sc.sing_c.size() == 15);
  CHECK(sc.s_theta.size() == 12);
  CHECK(sc.s_theta == sc.s_theta_tilde);
  CHECK(sorted(sc.s_c) == sorted({pt({1, -2, 1}), pt({1, 1, -2}), normalize(pt({-5, 1, 1}))}));
  for (const auto& rec : sc.sing_c) {
    CHECK(rec.node);
    CHECK(rec.on_d == contains(sc.s_theta_tilde, rec.p));
    CHECK((rec.rank == 2) == contains(sc.s_theta, rec.p));
  }
}

TEST_CASE("classification of the identity member of the smooth family") {
  SymDetRep r = build_example("prop44").rep;
  SingClassification sc = classify_singularities(r, derived_equations(r));
  CHECK(sc.sing_c.size() == 12);
  CHECK(sc.s_theta.size() == 12);
  CHECK(sc.s_theta_tilde.size() == 12);
  CHECK(sc.s_c.empty());
}

TEST_CASE("nodal cubic block: the node is in S-tilde-theta but not S-theta") {
  const Field f13 = Field::prime(13);
  SUBCASE("with the Fermat cubic") {
    SymDetRep r = build_example("rmk31", {{"f", "x1^3 + x2^3 + x3^3"}}).rep;
    DerivedEquations eq = derived_equations(r);
    CHECK(kernel_rank_det(fiber_gram(r, pt({0, 0, 1}, f13))).rank == 3);
    CHECK(eq.d_cubic.eval(pt({0, 0, 1}, f13)).is_zero());
    // The Fermat cubic is tangent to the nodal cubic at (1:0:-1).
    CHECK_FALSE(is_node(eq.sextic, pt({1, 0, -1}, f13)));
    CHECK_THROWS_AS(classify_singularities(r, eq), MathRejection);
  }
  SUBCASE("with the default transverse cubic") {
    SymDetRep r = build_example("rmk31").rep;
    SingClassification sc = classify_singularities(r, derived_equations(r));
    Point node = pt({0, 0, 1}, f13);
    CHECK(contains(sc.s_theta_tilde, node));
    CHECK_FALSE(contains(sc.s_theta, node));
  }
}

TEST_CASE("cuspidal and non-reduced sextics are rejected") {
  // A cusp at (1:1:1) on a cubic, times three lines through none of its
  // singular points.
  SymDetRep cusp = rep_from({{"x1", "0", "0", "0"},
                             {"0", "x2", "0", "0"},
                             {"0", "0", "x3", "0"},
                             {"0", "0", "0", "(x2 - x3)*(x2 - x3)*x3 - (x1 - x3)*(x1 - x3)*(x1 - x3)"}});
  try {
    classify_singularities(cusp, derived_equations(cusp));
    FAIL("cusp accepted");
  } catch (const MathRejection& e) {
    CHECK(e.condition() == "non-nodal singularity");
  }
  SymDetRep doubled = rep_from({{"x1", "0", "0", "0"}, {"0", "x1", "0", "0"}, {"0", "0", "x3", "0"},
                                {"0", "0", "0", "x2^3 + x3^3 + x1*x2*x3"}});
  try {
    classify_singularities(doubled, derived_equations(doubled));
    FAIL("non-reduced sextic accepted");
  } catch (const MathRejection& e) {
    CHECK(e.condition() == "non-reduced curve");
  }
  CHECK_THROWS_AS(classify_singularities(build_example("prop44", {{"field", "fp:5"}}).rep,
                                         derived_equations(build_example("prop44", {{"field", "fp:5"}}).rep)),
                  std::domain_error);
}

TEST_CASE("component genera") {
  auto g = component_genera({{1, 0}, {3, 0}, {5, 5}});
  REQUIRE(g.size() == 3);
  CHECK(g[0].degree == 1);
  CHECK(g[0].genus == 0);
  CHECK(g[1].genus == 1);
  CHECK(g[2].degree == 5);
  CHECK(g[2].genus == 1);
  CHECK_THROWS(component_genera({{3, 2}}));
}

TEST_CASE("factored and finite-field modes agree after reduction") {
  std::vector<MultiPoly> lines;
  for (const auto& l : kSixLines)
    lines.push_back(px(std::to_string(l[0]) + "*x1 + " + std::to_string(l[1]) + "*x2 + " + std::to_string(l[2]) + "*x3"));
  SingularPoints rational = singular_points_factored(lines);
  MultiPoly product = lines[0];
  for (std::size_t i = 1; i < lines.size(); ++i) product = product * lines[i];
  for (std::uint32_t q : {11u, 13u}) {
    std::vector<Point> reduced;
    for (const auto& p : rational.points) reduced.push_back(reduce_point_mod(p, q));
    std::set<Point> distinct(reduced.begin(), reduced.end());
    REQUIRE(distinct.size() == 15);
    CHECK(sorted(singular_points(product.reduce_mod(q)).points) == sorted(reduced));
  }
}

TEST_CASE("Bezout count and rank strata on the example reps") {
  // Components (degree, internal nodes) of each default example's sextic.
  const std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> configs = {
      {"ex42ii", {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}},
      {"ex42i", {{1, 0}, {1, 0}, {1, 0}, {3, 0}}},
      {"prop44", {{1, 0}, {1, 0}, {1, 0}, {3, 0}}},
  };
  for (const auto& [name, comps] : configs) {
    CAPTURE(name);
    SymDetRep r = build_example(name).rep;
    SingClassification sc = classify_singularities(r, derived_equations(r));
    int expected = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      expected += comps[i].second;
      for (std::size_t j = i + 1; j < comps.size(); ++j) expected += comps[i].first * comps[j].first;
    }
    CHECK(static_cast<int>(sc.sing_c.size()) == expected);
  }
  for (const auto& name : example_names()) {
    CAPTURE(name);
    SymDetRep r = build_example(name).rep;
    SingClassification sc = classify_singularities(r, derived_equations(r));
    for (const auto& p : sc.s_theta) CHECK(contains(sc.s_theta_tilde, p));
  }
}
