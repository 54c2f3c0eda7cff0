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

#include "cubicplane/solve.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cubicplane/errors.hpp"
#include "cubicplane/linalg.hpp"

namespace cubicplane {

namespace {

std::pair<int, int> others(int var) {
  switch (var) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    case 2: return {0, 1};
    default: throw std::invalid_argument("variable index out of range");
  }
}

// Coefficients of var^k, each a polynomial in t = b / a.
std::vector<UniPoly> coefficients_in(const MultiPoly& f, int var) {
  auto [a, b] = others(var);
  (void)a;
  const Field fld = f.field();
  std::vector<std::vector<Scalar>> raw(static_cast<std::size_t>(f.degree_in(var) + 1));
  for (const auto& [e, c] : f.terms()) {
    auto& row = raw[e[var]];
    if (row.size() <= e[b]) row.resize(e[b] + 1u, fld.zero());
    row[e[b]] += c;
  }
  std::vector<UniPoly> out;
  for (auto& r : raw) out.emplace_back(fld, std::move(r));
  return out;
}

UniPoly bareiss_det(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  const Field fld = m[0][0].field();
  UniPoly prev = UniPoly::constant(fld.one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return UniPoly(fld);
      std::swap(m[r], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly homogenize_binary(const UniPoly& r, int a, int b, int degree, VarSet vars) {
  if (r.degree() > degree) throw ConsistencyError("resultant exceeds its expected degree");
  MultiPoly out(r.field(), vars, degree);
  for (int j = 0; j <= r.degree(); ++j) {
    if (r.coeff(j).is_zero()) continue;
    Exponent e{};
    e[a] = static_cast<std::uint8_t>(degree - j);
    e[b] = static_cast<std::uint8_t>(j);
    out.add_term(e, r.coeff(j));
  }
  return out;
}

UniPoly restrict_to_line(const MultiPoly& f, bool at_infinity, const Scalar& t) {
  // Line (x2:x3) = (1:t), or (0:1) when at_infinity; parameter is x1.
  const Field fld = f.field();
  std::vector<Scalar> c(static_cast<std::size_t>(f.degree() + 1), fld.zero());
  for (const auto& [e, v] : f.terms()) {
    if (at_infinity) {
      if (e[1] == 0) c[e[0]] += v;
    } else {
      c[e[0]] += v * t.pow(e[2]);
    }
  }
  return UniPoly(fld, std::move(c));
}

std::vector<MultiPoly> span_basis(const std::vector<MultiPoly>& forms) {
  std::vector<Exponent> monos;
  for (const auto& f : forms)
    for (const auto& [e, c] : f.terms()) monos.push_back(e);
  std::sort(monos.begin(), monos.end(), GradedLexGreater());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  const Field fld = forms[0].field();
  if (monos.empty()) return {};
  ScalarMatrix m(forms.size(), monos.size(), fld.zero());
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) m(i, j) = forms[i].coefficient(monos[j]);
  auto ech = row_reduce(m);
  std::vector<MultiPoly> basis;
  for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
    MultiPoly p(fld, forms[0].vars(), total_degree(monos[0]));
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (!ech.rref(i, j).is_zero()) p.add_term(monos[j], ech.rref(i, j));
    basis.push_back(std::move(p));
  }
  return basis;
}

// Eliminant of x1 from a and b, dehomogenized at x2 = 1.
UniPoly eliminant(const MultiPoly& a, const MultiPoly& b) {
  if (!a.involves(0) && !b.involves(0))
    return gcd(dehomogenize_binary(a, 0), dehomogenize_binary(b, 0));
  return dehomogenize_binary(resultant(a, b, 0), 0);
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.nvars() != 3 || g.nvars() != 3 || f.vars() != g.vars())
    throw std::invalid_argument("resultant needs two forms in the same three variables");
  const int mv = f.degree_in(var), nv = g.degree_in(var);
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.field(), f.vars(), 0);
  if (mv == 0 && nv == 0) throw DegenerateResultant("neither form involves the elimination variable");
  if (mv == 0) return f;
  if (nv == 0) return g;
  auto [a, b] = others(var);
  auto fc = coefficients_in(f, var);
  auto gc = coefficients_in(g, var);
  const std::size_t n = static_cast<std::size_t>(mv + nv);
  std::vector<std::vector<UniPoly>> syl(n, std::vector<UniPoly>(n, UniPoly(f.field())));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j <= mv; ++j) syl[i][i + j] = fc[mv - j];
  for (int i = 0; i < mv; ++i)
    for (int j = 0; j <= nv; ++j) syl[nv + i][i + j] = gc[nv - j];
  UniPoly r = bareiss_det(std::move(syl));
  const int degree = f.degree() * nv + g.degree() * mv - mv * nv;
  return homogenize_binary(r, a, b, degree, f.vars());
}

UniPoly dehomogenize_binary(const MultiPoly& form, int skip) {
  auto [a, b] = others(skip);
  (void)a;
  std::vector<Scalar> c(static_cast<std::size_t>(form.degree() + 1), form.field().zero());
  for (const auto& [e, v] : form.terms()) {
    if (e[skip] != 0) throw std::invalid_argument("form is not binary in the remaining variables");
    c[e[b]] += v;
  }
  return UniPoly(form.field(), std::move(c));
}

ZeroSet common_zeros(const std::vector<MultiPoly>& forms) {
  if (forms.empty()) throw PositiveDimensional("no equations");
  const Field fld = forms[0].field();
  int d = 0;
  for (const auto& f : forms) {
    if (f.nvars() != 3) throw std::invalid_argument("common_zeros works in a projective plane");
    if (!f.is_zero()) d = std::max(d, f.degree());
  }
  // Forms of lower degree are replaced by their multiples by all monomials
  // of the missing degree, which cut out the same projective set.
  std::vector<MultiPoly> lifted;
  for (const auto& f : forms) {
    if (f.is_zero() || f.degree() == d) {
      lifted.push_back(f);
      continue;
    }
    const int k = d - f.degree();
    for (int i = 0; i <= k; ++i)
      for (int j = 0; i + j <= k; ++j) {
        Exponent e{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(k - i - j)};
        lifted.push_back(f * MultiPoly::monomial(fld.one(), f.vars(), e));
      }
  }
  std::vector<MultiPoly> basis = span_basis(lifted);
  ZeroSet out;
  if (basis.empty()) throw PositiveDimensional("all equations vanish");
  if (d == 0) return out;
  if (basis.size() == 1) throw PositiveDimensional("a single curve");

  std::mt19937_64 rng(0xc0ffee);
  std::uniform_int_distribution<int> coef(-1000, 1000);
  auto combo = [&]() {
    MultiPoly p(fld, basis[0].vars(), d);
    for (const auto& b : basis) p += b * fld.from_int(coef(rng));
    return p;
  };

  UniPoly g(fld);
  for (int attempt = 0; attempt < 6 && g.is_zero(); ++attempt) {
    if (basis.size() == 2) {
      g = eliminant(basis[0], basis[1]);
      break;
    }
    MultiPoly alpha = combo();
    UniPoly acc = eliminant(alpha, combo());
    for (std::size_t j = 0; j + 1 < basis.size() && !acc.is_zero(); ++j) acc = gcd(acc, eliminant(alpha, combo()));
    g = acc;
  }
  if (g.is_zero()) throw PositiveDimensional("equations share a common component");

  auto collect_line = [&](bool at_inf, const Scalar& t) {
    UniPoly lg(fld);
    for (const auto& b : basis) lg = gcd(lg, restrict_to_line(b, at_inf, t));
    if (lg.is_zero()) throw PositiveDimensional("a line of common zeros");
    UniRoots r = field_roots(lg);
    if (r.residual_degree > 0) out.complete = false;
    for (const auto& [s, mult] : r.roots) {
      (void)mult;
      if (at_inf) out.points.push_back(normalize({s, fld.zero(), fld.one()}));
      else out.points.push_back(normalize({s, fld.one(), t}));
    }
  };

  if (g.degree() > 0) {
    UniRoots tr = field_roots(g);
    if (tr.residual_degree > 0) out.complete = false;
    for (const auto& [t, mult] : tr.roots) {
      (void)mult;
      collect_line(false, t);
    }
  }
  collect_line(true, fld.zero());

  Point e1{fld.one(), fld.zero(), fld.zero()};
  bool at_e1 = true;
  for (const auto& b : basis) at_e1 = at_e1 && b.eval(e1).is_zero();
  if (at_e1) out.points.push_back(e1);

  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

bool certify_no_common_zeros(const std::vector<MultiPoly>& forms) {
  const Field fld = forms[0].field();
  Point e1{fld.one(), fld.zero(), fld.zero()};
  bool at_e1 = true;
  for (const auto& f : forms) at_e1 = at_e1 && f.eval(e1).is_zero();
  if (at_e1) return false;
  std::vector<MultiPoly> basis = span_basis(forms);
  if (basis.size() < 2) return basis.size() == 1 && basis[0].degree() == 0;
  std::mt19937_64 rng(0xbeef);
  std::uniform_int_distribution<int> coef(-1000, 1000);
  auto combo = [&]() {
    MultiPoly p(fld, basis[0].vars(), basis[0].degree());
    for (const auto& b : basis) p += b * fld.from_int(coef(rng));
    return p;
  };
  // Any common zero other than (1:0:0) projects to a common root of the
  // eliminants, as a binary form in (x2:x3).
  for (int attempt = 0; attempt < 4; ++attempt) {
    MultiPoly alpha = basis.size() == 2 ? basis[0] : combo();
    std::vector<MultiPoly> others_list;
    if (basis.size() == 2) {
      others_list.push_back(basis[1]);
    } else {
      for (std::size_t j = 0; j < basis.size(); ++j) others_list.push_back(combo());
    }
    UniPoly g(fld);
    bool drop_everywhere = true;
    bool degenerate = false;
    for (const auto& beta : others_list) {
      if (!alpha.involves(0) && !beta.involves(0)) {
        degenerate = true;
        break;
      }
      MultiPoly r = resultant(alpha, beta, 0);
      if (r.is_zero()) {
        degenerate = true;
        break;
      }
      UniPoly u = dehomogenize_binary(r, 0);
      drop_everywhere = drop_everywhere && u.degree() < r.degree();
      g = gcd(g, u);
    }
    if (!degenerate && g.degree() == 0 && !drop_everywhere) return true;
    if (basis.size() == 2) return false;
  }
  return false;
}

bool is_square_free(const MultiPoly& h) {
  if (h.is_zero()) return false;
  const int d = h.degree();
  if (d <= 1) return true;
  const Field fld = h.field();
  if (fld.is_finite() && fld.modulus() <= static_cast<std::uint32_t>(d))
    throw std::domain_error("square-free test needs characteristic above the degree");

  std::vector<Point> candidates;
  if (fld.is_finite()) {
    candidates = plane_points(fld);
  } else {
    for (int i = 0; i <= d + 1; ++i)
      for (int j = -(d + 1); j <= d + 1; ++j)
        for (int k = -(d + 1); k <= d + 1; ++k)
          if (i != 0 || j != 0 || k != 0) candidates.push_back({fld.from_int(i), fld.from_int(j), fld.from_int(k)});
  }
  for (const Point& v : candidates) {
    if (h.eval(v).is_zero()) continue;
    int lead = first_nonzero(v);
    auto [j, k] = others(lead);
    std::vector<MultiPoly> images;
    for (int i = 0; i < 3; ++i) {
      MultiPoly img = MultiPoly::variable(fld, h.vars(), 0) * v[i];
      if (i == j) img += MultiPoly::variable(fld, h.vars(), 1);
      if (i == k) img += MultiPoly::variable(fld, h.vars(), 2);
      images.push_back(img);
    }
    MultiPoly moved = h.substitute(images);
    return !resultant(moved, moved.derivative(0), 0).is_zero();
  }
  throw ConsistencyError("no point off the curve found");
}

std::vector<Point> plane_points(Field f) {
  if (!f.is_finite()) throw std::invalid_argument("point enumeration needs a finite field");
  const std::uint32_t q = f.modulus();
  std::vector<Point> pts;
  pts.push_back({f.zero(), f.zero(), f.one()});
  for (std::uint32_t b = 0; b < q; ++b) pts.push_back({f.zero(), f.one(), f.from_int(b)});
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) pts.push_back({f.one(), f.from_int(a), f.from_int(b)});
  return pts;
}

}  // namespace cubicplane
