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

#include "cubicplane/errors.hpp"
#include "cubicplane/fourfold.hpp"

namespace cubicplane {

namespace {

using Rows = std::vector<std::vector<Scalar>>;

MultiPoly linear_form(const std::vector<Scalar>& c) {
  MultiPoly f(c[0].field(), VarSet::Ambient, 1);
  for (int i = 0; i < 6; ++i) {
    Exponent e{};
    e[i] = 1;
    f.add_term(e, c[i]);
  }
  return f;
}

bool all_zero(const Rows& r) {
  for (const auto& row : r)
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

Rows zero_rows(const Field& f, std::size_t n) { return Rows(n, std::vector<Scalar>(6, f.zero())); }

template <class F, class Lift>
Matrix<F> plane_matrix(const Plane& pl, Lift lift) {
  std::vector<std::vector<F>> rows;
  for (std::size_t r = 0; r < pl.a.size(); ++r) {
    std::vector<F> row;
    for (int c = 0; c < 6; ++c) row.push_back(lift(pl.a[r][c], pl.b[r][c]));
    rows.push_back(std::move(row));
  }
  return Matrix<F>::from_rows(rows);
}

template <class F>
Matrix<F> stack(const Matrix<F>& x, const Matrix<F>& y) {
  Matrix<F> m(x.rows() + y.rows(), x.cols(), x(0, 0));
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t c = 0; c < y.cols(); ++c) m(x.rows() + r, c) = y(r, c);
  return m;
}

// Builds the echelon-form plane from three rows a + b*sqrt(d).
Plane make_plane(const Rows& a, const Rows& b, const std::optional<Scalar>& d) {
  const Field f = a[0][0].field();
  Plane pl;
  if (!d || all_zero(b)) {
    ScalarMatrix m = ScalarMatrix::from_rows(a);
    auto e = row_reduce(m);
    if (e.pivot_cols.size() != 3) throw ConsistencyError("plane equations are dependent");
    for (int r = 0; r < 3; ++r) {
      std::vector<Scalar> row;
      for (int c = 0; c < 6; ++c) row.push_back(e.rref(r, c));
      pl.a.push_back(row);
    }
    pl.b = zero_rows(f, 3);
    return pl;
  }
  auto lift = [&](const Scalar& x, const Scalar& y) { return QuadScalar(x, y, *d); };
  Plane raw{a, b, d};
  auto e = row_reduce(plane_matrix<QuadScalar>(raw, lift));
  if (e.pivot_cols.size() != 3) throw ConsistencyError("plane equations are dependent");
  for (int r = 0; r < 3; ++r) {
    std::vector<Scalar> ra, rb;
    for (int c = 0; c < 6; ++c) {
      ra.push_back(e.rref(r, c).a);
      rb.push_back(e.rref(r, c).b);
    }
    pl.a.push_back(ra);
    pl.b.push_back(rb);
  }
  pl.d = d;
  return pl;
}

template <class F>
int dimension_from(const Matrix<F>& stacked) {
  return 6 - static_cast<int>(rank(stacked)) - 1;
}

}  // namespace

bool Plane::is_p() const {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (int c = 3; c < 6; ++c)
      if (!a[r][c].is_zero() || !b[r][c].is_zero()) return false;
  return true;
}

std::string Plane::to_string() const {
  std::string s = "{";
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r > 0) s += ", ";
    bool has_b = false;
    for (const auto& c : b[r]) has_b = has_b || !c.is_zero();
    s += linear_form(a[r]).to_string();
    if (has_b) s += " + sqrt(" + d->to_string() + ")*(" + linear_form(b[r]).to_string() + ")";
    s += " = 0";
  }
  return s + "}";
}

PlanePair split_rank2_fiber(const SymDetRep& rep, const Point& p) {
  const Field f = rep.field();
  ScalarMatrix g = fiber_gram(rep, p);
  if (rank(g) != 2) throw std::invalid_argument("fiber over " + point_to_string(p) + " does not have rank 2");
  int si = -1, sj = -1;
  Scalar det2 = f.zero();
  for (int i = 0; i < 4 && si < 0; ++i)
    for (int j = i + 1; j < 4; ++j) {
      det2 = g(i, i) * g(j, j) - g(i, j) * g(i, j);
      if (!det2.is_zero()) {
        si = i;
        sj = j;
        break;
      }
    }
  if (si < 0) throw ConsistencyError("rank-2 symmetric matrix without a nonsingular principal minor");
  // Q = alpha*l1^2 + 2*beta*l1*l2 + gamma*l2^2 with l1, l2 rows si, sj of M(p).
  const Scalar alpha = g(sj, sj) / det2, beta = -g(si, sj) / det2, gamma = g(si, si) / det2;
  std::vector<Scalar> l1(4, f.zero()), l2(4, f.zero());
  for (int c = 0; c < 4; ++c) {
    l1[c] = g(si, c);
    l2[c] = g(sj, c);
  }
  auto combo = [&](const Scalar& x, const std::vector<Scalar>& v, const Scalar& y, const std::vector<Scalar>& w) {
    std::vector<Scalar> out;
    for (int c = 0; c < 4; ++c) out.push_back(x * v[c] + y * w[c]);
    return out;
  };

  const int k = first_nonzero(p);
  auto to_rows = [&](const std::vector<Scalar>& fiber_form, bool with_cone) {
    Rows rows;
    if (with_cone)
      for (int i = 0; i < 3; ++i) {
        if (i == k) continue;
        std::vector<Scalar> r(6, f.zero());
        r[i] = f.one();
        r[k] = -p[i];
        rows.push_back(r);
      }
    std::vector<Scalar> r(6, f.zero());
    for (int m = 0; m < 3; ++m) r[3 + m] = fiber_form[m];
    r[k] += fiber_form[3];
    rows.push_back(r);
    return rows;
  };

  PlanePair pair;
  pair.source = p;
  const Scalar zero = f.zero(), one = f.one();
  std::vector<std::vector<Scalar>> forms_a, forms_b;
  if (alpha.is_zero()) {
    forms_a = {l2, combo(beta * f.from_int(2), l1, gamma, l2)};
    forms_b = {std::vector<Scalar>(4, zero), std::vector<Scalar>(4, zero)};
  } else {
    const Scalar disc = beta * beta - alpha * gamma;
    if (auto s = disc.sqrt()) {
      forms_a = {combo(one, l1, (beta + *s) / alpha, l2), combo(one, l1, (beta - *s) / alpha, l2)};
      forms_b = {std::vector<Scalar>(4, zero), std::vector<Scalar>(4, zero)};
    } else {
      // roots (-beta +- sqrt(disc)) / alpha of the dehomogenized form
      std::vector<Scalar> base = combo(one, l1, beta / alpha, l2);
      std::vector<Scalar> im = combo(zero, l1, alpha.inverse(), l2);
      forms_a = {base, base};
      forms_b = {combo(zero, l1, -one, im), im};
      pair.d = disc;
    }
  }
  Plane planes[2];
  for (int s = 0; s < 2; ++s) {
    Rows a = to_rows(forms_a[s], true);
    Rows b = to_rows(forms_b[s], true);
    for (auto& r : b)
      if (&r != &b.back()) std::fill(r.begin(), r.end(), zero);
    planes[s] = make_plane(a, b, pair.d);
  }
  if (!pair.d && planes[1].a < planes[0].a) std::swap(planes[0], planes[1]);
  pair.first = std::move(planes[0]);
  pair.second = std::move(planes[1]);
  return pair;
}

int intersection_dimension(const Plane& x, const Plane& y) {
  if (!x.d && !y.d) return dimension_from(stack(ScalarMatrix::from_rows(x.a), ScalarMatrix::from_rows(y.a)));
  if (!x.d || !y.d || *x.d == *y.d) {
    const Scalar d = x.d ? *x.d : *y.d;
    auto lift = [&](const Scalar& a, const Scalar& b) { return QuadScalar(a, b, d); };
    return dimension_from(stack(plane_matrix<QuadScalar>(x, lift), plane_matrix<QuadScalar>(y, lift)));
  }
  const Scalar d1 = *x.d, d2 = *y.d;
  if (auto s = (d1 * d2).sqrt()) {
    // sqrt(d2) = (s / d1) * sqrt(d1)
    const Scalar factor = *s / d1;
    auto lift1 = [&](const Scalar& a, const Scalar& b) { return QuadScalar(a, b, d1); };
    auto lift2 = [&](const Scalar& a, const Scalar& b) { return QuadScalar(a, b * factor, d1); };
    return dimension_from(stack(plane_matrix<QuadScalar>(x, lift1), plane_matrix<QuadScalar>(y, lift2)));
  }
  using Bi = Quad<QuadScalar>;
  const Scalar zero = d1.field().zero();
  const QuadScalar outer_d(d2, zero, d1);
  auto lift1 = [&](const Scalar& a, const Scalar& b) { return Bi(QuadScalar(a, b, d1), QuadScalar(zero, zero, d1), outer_d); };
  auto lift2 = [&](const Scalar& a, const Scalar& b) {
    return Bi(QuadScalar(a, zero, d1), QuadScalar(b, zero, d1), outer_d);
  };
  return dimension_from(stack(plane_matrix<Bi>(x, lift1), plane_matrix<Bi>(y, lift2)));
}

namespace {

template <class F, class Lift>
bool vanishes_on(const Matrix<F>& m, const MultiPoly& fourfold, Lift lift) {
  auto basis = kernel_basis(m);
  if (basis.size() != 3) throw ConsistencyError("plane equations do not cut out a plane");
  const F zero = zero_like(m(0, 0));
  auto coef = [&](int v) { return lift(fourfold.field().from_int(v)); };
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      for (int r = 0; r < 4; ++r) {
        std::vector<F> x(6, zero);
        for (int i = 0; i < 6; ++i) x[i] = coef(s) * basis[0][i] + coef(t) * basis[1][i] + coef(r) * basis[2][i];
        F v = fourfold.eval_as<F>(std::span<const F>(x), lift);
        if (!is_zero(v)) return false;
      }
  return true;
}

}  // namespace

bool plane_on_fourfold(const Plane& plane, const MultiPoly& fourfold) {
  // A cubic in three variables vanishing on {0,1,2,3}^3 is zero (char >= 5).
  if (!plane.d) return vanishes_on(ScalarMatrix::from_rows(plane.a), fourfold, [](const Scalar& c) { return c; });
  const Scalar d = *plane.d;
  auto lift2 = [&](const Scalar& a, const Scalar& b) { return QuadScalar(a, b, d); };
  auto lift1 = [&](const Scalar& c) { return QuadScalar(c, d.field().zero(), d); };
  return vanishes_on(plane_matrix<QuadScalar>(plane, lift2), fourfold, lift1);
}

CouplesReport couples_and_intersections(const SymDetRep& rep, const DerivedEquations& eq,
                                        const std::vector<Point>& s_theta) {
  CouplesReport out;
  for (const Point& p : s_theta) out.couples.push_back(split_rank2_fiber(rep, p));
  for (const auto& c : out.couples) {
    out.within_lines = out.within_lines && intersection_dimension(c.first, c.second) == 1;
    out.none_is_p = out.none_is_p && !c.first.is_p() && !c.second.is_p();
    out.all_on_x = out.all_on_x && plane_on_fourfold(c.first, eq.fourfold) && plane_on_fourfold(c.second, eq.fourfold);
  }
  for (std::size_t i = 0; i < out.couples.size(); ++i)
    for (std::size_t j = i + 1; j < out.couples.size(); ++j)
      for (const Plane* x : {&out.couples[i].first, &out.couples[i].second})
        for (const Plane* y : {&out.couples[j].first, &out.couples[j].second}) {
          ++out.cross_checks;
          out.cross_points = out.cross_points && intersection_dimension(*x, *y) == 0;
        }
  return out;
}

}  // namespace cubicplane
