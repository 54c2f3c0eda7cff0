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

#include "cubicplane/curves.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cubicplane/errors.hpp"

namespace cubicplane {

namespace {

bool is_singular_at(const MultiPoly& h, const std::vector<MultiPoly>& grad, const Point& p) {
  if (!h.eval(p).is_zero()) return false;
  for (const auto& g : grad)
    if (!g.eval(p).is_zero()) return false;
  return true;
}

void require_char(const Field& f) {
  if (f.is_finite() && f.modulus() < 7)
    throw std::domain_error("the field characteristic must be at least 7, got " + std::to_string(f.modulus()));
}

std::vector<MultiPoly> gradient(const MultiPoly& h) { return {h.derivative(0), h.derivative(1), h.derivative(2)}; }

}  // namespace

SingularPoints singular_points(const MultiPoly& h) {
  require_char(h.field());
  if (!is_square_free(h)) throw MathRejection("non-reduced curve", "the sextic has a repeated component");
  const auto grad = gradient(h);
  SingularPoints out;
  if (h.field().is_finite()) {
    for (const Point& p : plane_points(h.field()))
      if (is_singular_at(h, grad, p)) out.points.push_back(p);
    return out;
  }
  try {
    ZeroSet z = common_zeros(grad);
    out.points = std::move(z.points);
    out.complete = z.complete;
  } catch (const PositiveDimensional&) {
    throw MathRejection("non-reduced curve", "the singular locus contains a curve");
  }
  return out;
}

SingularPoints singular_points_factored(const std::vector<MultiPoly>& components) {
  SingularPoints out;
  auto add = [&](const ZeroSet& z) {
    out.points.insert(out.points.end(), z.points.begin(), z.points.end());
    out.complete = out.complete && z.complete;
  };
  for (std::size_t i = 0; i < components.size(); ++i) {
    const MultiPoly& c = components[i];
    if (c.degree() > 1) {
      SingularPoints own = singular_points(c);
      out.points.insert(out.points.end(), own.points.begin(), own.points.end());
      out.complete = out.complete && own.complete;
    }
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      try {
        if (c.field().is_finite()) {
          ZeroSet z;
          for (const Point& p : plane_points(c.field()))
            if (c.eval(p).is_zero() && components[j].eval(p).is_zero()) z.points.push_back(p);
          add(z);
        } else {
          add(common_zeros({c, components[j]}));
        }
      } catch (const PositiveDimensional&) {
        throw MathRejection("non-reduced curve", "two components share a common factor");
      }
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

bool is_node(const MultiPoly& h, const Point& p) {
  const auto grad = gradient(h);
  if (!is_singular_at(h, grad, p)) throw std::invalid_argument(point_to_string(p) + " is not a singular point");
  const int k = first_nonzero(p);
  std::vector<int> idx;
  for (int i = 0; i < 3; ++i)
    if (i != k) idx.push_back(i);
  Scalar hess[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) hess[a][b] = grad[idx[a]].derivative(idx[b]).eval(p);
  return !(hess[0][0] * hess[1][1] - hess[0][1] * hess[1][0]).is_zero();
}

SingClassification classify_singularities(const SymDetRep& rep, const DerivedEquations& eq) {
  SingularPoints sing = singular_points(eq.sextic);
  SingClassification out;
  out.complete = sing.complete;
  for (const Point& p : sing.points) {
    SingPointRecord rec;
    rec.p = p;
    rec.node = is_node(eq.sextic, p);
    if (!rec.node) throw MathRejection("non-nodal singularity", "the sextic is not nodal at " + point_to_string(p));
    rec.rank = static_cast<int>(rank(fiber_gram(rep, p)));
    if (rec.rank > 3) throw ConsistencyError("M has full rank at the singular point " + point_to_string(p));
    rec.on_d = eq.d_cubic.eval(p).is_zero();
    if (rec.rank == 2) out.s_theta.push_back(p);
    if (rec.on_d) {
      out.s_theta_tilde.push_back(p);
      out.i_c.push_back(p);
    } else {
      out.s_c.push_back(p);
    }
    if (rec.rank == 2 && !rec.on_d)
      throw ConsistencyError("rank-2 point " + point_to_string(p) + " is off the cubic D");
    out.sing_c.push_back(std::move(rec));
  }
  return out;
}

std::vector<ComponentGenus> component_genera(const std::vector<std::pair<int, int>>& degree_and_nodes) {
  std::vector<ComponentGenus> out;
  for (const auto& [d, n] : degree_and_nodes) {
    if (d < 1 || n < 0) throw std::invalid_argument("degree must be positive and node count non-negative");
    int g = (d - 1) * (d - 2) / 2 - n;
    if (g < 0)
      throw std::invalid_argument("a degree " + std::to_string(d) + " component cannot have " + std::to_string(n) +
                                  " nodes");
    out.push_back({d, g});
  }
  return out;
}

}  // namespace cubicplane
