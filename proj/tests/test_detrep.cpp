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
#include <numeric>

#include "cubicplane/detrep.hpp"
#include "cubicplane/errors.hpp"
#include "cubicplane/examples.hpp"
#include "cubicplane/linalg.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// Leibniz expansion over all 24 permutations; deliberately naive.
Scalar leibniz4(const std::vector<std::vector<Scalar>>& a) {
  std::array<int, 4> perm{0, 1, 2, 3};
  Scalar total = a[0][0].field().zero();
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    Scalar term = a[0][0].field().one();
    for (int i = 0; i < 4; ++i) term *= a[i][perm[i]];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<Scalar>> evaluate_entries(const SymDetRep& rep, const Point& p) {
  std::vector<std::vector<Scalar>> a(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i].push_back(rep.entry(i, j).eval(p));
  return a;
}

SymDetRep ex42ii() { return build_example("ex42ii").rep; }

}  // namespace

TEST_CASE("validation accepts the diagonal six-line matrix") {
  SymDetRep r = ex42ii();
  CHECK(r.field().is_rational());
  CHECK(r.entry(3, 3) == px("(x1 + x2 + x3)*(x1 + 2*x2 + 3*x3)*(x1 + 3*x2 + 2*x3)"));
}

TEST_CASE("validation rejects asymmetric, misprofiled and degenerate matrices") {
  try {
    rep_from({{"x1", "x1", "0", "0"}, {"x2", "x2", "0", "0"}, {"0", "0", "x3", "0"}, {"0", "0", "0", "x1^3"}});
    FAIL("asymmetric matrix accepted");
  } catch (const MathRejection& e) {
    CHECK(e.condition() == "asymmetric matrix");
    CHECK(std::string(e.what()).find("entry(1,2)") != std::string::npos);
  }
  try {
    rep_from({{"x1", "0", "0", "0"}, {"0", "x2", "0", "0"}, {"0", "0", "x3", "0"}, {"0", "0", "0", "0"}});
    FAIL("zero determinant accepted");
  } catch (const MathRejection& e) {
    CHECK(e.condition() == "zero determinant");
  }
  try {
    rep_from({{"x1^2", "0", "0", "0"}, {"0", "x2", "0", "0"}, {"0", "0", "x3", "0"}, {"0", "0", "0", "x1^3"}});
    FAIL("wrong degree accepted");
  } catch (const MathRejection& e) {
    CHECK(e.condition() == "wrong degree profile");
  }
  PolyMatrix4 mixed = zero_matrix(QQ);
  mixed[0][0] = px("x1");
  mixed[1][1] = px("x2");
  mixed[2][2] = px("x3", Field::prime(7));
  mixed[3][3] = px("x1^3");
  CHECK_THROWS_AS(SymDetRep::validate(mixed), MathRejection);
}

TEST_CASE("derived equations of the worked examples") {
  SUBCASE("six lines") {
    DerivedEquations eq = derived_equations(ex42ii());
    const MultiPoly cubic = px("(x1 + x2 + x3)*(x1 + 2*x2 + 3*x3)*(x1 + 3*x2 + 2*x3)");
    CHECK(eq.sextic == px("x1*x2*x3") * cubic);
    CHECK(eq.d_cubic == px("x1*x2*x3"));
    CHECK(eq.fourfold == pa("x1*u1^2 + x2*u2^2 + x3*u3^2") + cubic.with_vars(VarSet::Ambient));
  }
  SUBCASE("net with three base points") {
    const Field f13 = Field::prime(13);
    DerivedEquations eq = derived_equations(build_example("ex42i").rep);
    const MultiPoly fermat = px("x1^3 + x2^3 + x3^3", f13);
    CHECK(eq.sextic == px("2*x1*x2*x3", f13) * fermat);
    CHECK(eq.d_cubic == px("2*x1*x2*x3", f13));
    CHECK(eq.fourfold == pa("2*x1*u1*u2 + 2*x2*u1*u3 + 2*x3*u2*u3 + x1^3 + x2^3 + x3^3", f13));
  }
  SUBCASE("identity member of the smooth family") {
    const Field f13 = Field::prime(13);
    DerivedEquations eq = derived_equations(build_example("prop44").rep);
    const MultiPoly fa = prop44_cubic({{f13.one(), f13.zero(), f13.zero()},
                                       {f13.zero(), f13.one(), f13.zero()},
                                       {f13.zero(), f13.zero(), f13.one()}});
    CHECK(eq.sextic == -(px("x1*x2*x3", f13) * fa));
    CHECK(eq.d_cubic == px("x1*x2*x3", f13));
    CHECK(eq.fourfold == pa("x1*u1^2 + x2*u2^2 + x3*u3^2", f13) - fa.with_vars(VarSet::Ambient));
  }
}

TEST_CASE("fourfold restrictions: P lies on X and the plane section is f") {
  std::mt19937 g(11);
  for (Field f : {QQ, Field::prime(11)}) {
    for (int trial = 0; trial < 10; ++trial) {
      SymDetRep r = random_rep(g, f);
      const MultiPoly F = derived_equations(r).fourfold;
      const MultiPoly z = MultiPoly(f, VarSet::Ambient, 1);
      std::vector<MultiPoly> on_p{z, z, z, MultiPoly::variable(f, VarSet::Ambient, 3),
                                  MultiPoly::variable(f, VarSet::Ambient, 4), MultiPoly::variable(f, VarSet::Ambient, 5)};
      CHECK(F.substitute(on_p).is_zero());
      std::vector<MultiPoly> on_pi{MultiPoly::variable(f, VarSet::Ambient, 0), MultiPoly::variable(f, VarSet::Ambient, 1),
                                   MultiPoly::variable(f, VarSet::Ambient, 2), z, z, z};
      CHECK(F.substitute(on_pi) == r.entry(3, 3).with_vars(VarSet::Ambient));
    }
  }
}

TEST_CASE("fiber Gram: det commutes with evaluation and the fiber equation holds") {
  std::mt19937 g(5);
  const Field f = Field::prime(13);
  std::uniform_int_distribution<int> d(0, 12);
  for (int trial = 0; trial < 20; ++trial) {
    SymDetRep r = random_rep(g, f);
    DerivedEquations eq = derived_equations(r);
    for (int k = 0; k < 5; ++k) {
      Point p = pt({d(g), d(g), d(g)}, f);
      if (std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
      auto a = evaluate_entries(r, p);
      CHECK(leibniz4(a) == eq.sextic.eval(p));
      std::vector<std::vector<Scalar>> block{{a[0][0], a[0][1], a[0][2]}, {a[1][0], a[1][1], a[1][2]},
                                             {a[2][0], a[2][1], a[2][2]}};
      CHECK(determinant(ScalarMatrix::from_rows(block)) == eq.d_cubic.eval(p));
      // F(t*p, u) = t * (u, t) M(p) (u, t)^T
      const Scalar t = f.from_int(d(g));
      Point u{f.from_int(d(g)), f.from_int(d(g)), f.from_int(d(g))};
      Point amb{t * p[0], t * p[1], t * p[2], u[0], u[1], u[2]};
      std::vector<Scalar> v{u[0], u[1], u[2], t};
      Scalar quad = f.zero();
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) quad += v[i] * a[i][j] * v[j];
      CHECK(eq.fourfold.eval(amb) == t * quad);
    }
  }
}

TEST_CASE("fiber Gram examples") {
  const Field f13 = Field::prime(13);
  SymDetRep p44 = build_example("prop44").rep;
  ScalarMatrix g1 = fiber_gram(p44, pt({0, 0, 1}, f13));
  KernelRankDet k1 = kernel_rank_det(g1);
  CHECK(k1.rank == 2);
  CHECK(g1(2, 2) == f13.one());
  CHECK(g1(3, 3) == f13.from_int(-1));
  ScalarMatrix g2 = fiber_gram(p44, pt({1, 1, 1}, f13));
  CHECK(kernel_rank_det(g2).rank == 4);
  CHECK(g2(3, 3) == f13.from_int(-3));
  ScalarMatrix g3 = fiber_gram(ex42ii(), pt({1, -2, 1}));
  KernelRankDet k3 = kernel_rank_det(g3);
  CHECK(k3.rank == 3);
  CHECK(g3(1, 1) == QQ.from_int(-2));
  CHECK(g3(3, 3).is_zero());
}

TEST_CASE("kernel, rank and determinant of small Gram matrices") {
  auto diag = [](std::vector<long> v) {
    ScalarMatrix m(4, 4, QQ.zero());
    for (int i = 0; i < 4; ++i) m(i, i) = QQ.from_int(v[i]);
    return m;
  };
  KernelRankDet a = kernel_rank_det(diag({0, 0, 1, -1}));
  CHECK(a.rank == 2);
  CHECK(a.det.is_zero());
  REQUIRE(a.kernel.size() == 2);
  CHECK(a.kernel[0] == pt({1, 0, 0, 0}));
  CHECK(a.kernel[1] == pt({0, 1, 0, 0}));
  KernelRankDet b = kernel_rank_det(diag({1, 1, 1, 1}));
  CHECK(b.rank == 4);
  CHECK(b.det == QQ.one());
  CHECK(b.kernel.empty());
  KernelRankDet c = kernel_rank_det(diag({1, -2, 1, 0}));
  CHECK(c.rank == 3);
  REQUIRE(c.kernel.size() == 1);
  CHECK(c.kernel[0] == pt({0, 0, 0, 1}));
}

TEST_CASE("rank one fibers signal an invalid representation") {
  // The whole upper block and the q_k vanish at (0:0:1), so M(p) has rank 1.
  SymDetRep r = rep_from({{"x1", "0", "0", "x1*x2"}, {"0", "x2", "0", "x1^2"}, {"0", "0", "x1", "x2^2"},
                          {"x1*x2", "x1^2", "x2^2", "x3^3"}});
  CHECK_THROWS_AS(fiber_gram(r, pt({0, 0, 1})), MathRejection);
}

TEST_CASE("reduction mod q commutes with derivation") {
  std::mt19937 g(17);
  for (int trial = 0; trial < 10; ++trial) {
    SymDetRep r = random_rep(g, QQ);
    DerivedEquations eq = derived_equations(r);
    for (std::uint32_t q : {7u, 11u, 13u}) {
      SymDetRep rq = r.reduce_mod(q);
      if (derived_equations(rq).sextic.is_zero()) continue;
      DerivedEquations eqq = derived_equations(rq);
      CHECK(eqq.sextic == eq.sextic.reduce_mod(q));
      CHECK(eqq.d_cubic == eq.d_cubic.reduce_mod(q));
      CHECK(eqq.fourfold == eq.fourfold.reduce_mod(q));
    }
  }
}

TEST_CASE("the net generators are the coefficient matrices of G") {
  SymDetRep r = build_example("ex42i").rep;
  const Field f13 = r.field();
  for (int k = 0; k < 3; ++k) {
    ScalarMatrix g = net_generator(r, k);
    Point e(3, f13.zero());
    e[k] = f13.one();
    ScalarMatrix full = fiber_gram(r, e);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(g(i, j) == full(i, j));
  }
}
