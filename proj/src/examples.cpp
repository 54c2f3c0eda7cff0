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

#include "cubicplane/examples.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "cubicplane/errors.hpp"
#include "cubicplane/parse.hpp"
#include "cubicplane/solve.hpp"

namespace cubicplane {

namespace {

using Builder = std::function<NamedExample(const Params&)>;

MultiPoly P(const std::string& text, const Field& f) { return parse_poly(text, VarSet::Plane, f); }

PolyMatrix4 from_strings(const std::array<std::array<std::string, 4>, 4>& s, const Field& f) {
  PolyMatrix4 m{{{P("0", f), P("0", f), P("0", f), P("0", f)},
                 {P("0", f), P("0", f), P("0", f), P("0", f)},
                 {P("0", f), P("0", f), P("0", f), P("0", f)},
                 {P("0", f), P("0", f), P("0", f), P("0", f)}}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = P(s[i][j], f);
  return m;
}

PolyMatrix4 diagonal(const std::array<MultiPoly, 4>& d) {
  const Field f = d[0].field();
  PolyMatrix4 m{{{P("0", f), P("0", f), P("0", f), P("0", f)},
                 {P("0", f), P("0", f), P("0", f), P("0", f)},
                 {P("0", f), P("0", f), P("0", f), P("0", f)},
                 {P("0", f), P("0", f), P("0", f), P("0", f)}}};
  for (int i = 0; i < 4; ++i) m[i][i] = d[i];
  return m;
}

Params merge(const Params& defaults, const Params& given, const std::string& name) {
  Params out = defaults;
  for (const auto& [k, v] : given) {
    if (!defaults.count(k)) throw std::invalid_argument("example " + name + " has no parameter '" + k + "'");
    out[k] = v;
  }
  return out;
}

void require_degree(const MultiPoly& p, int d, const std::string& what) {
  if (p.is_zero() || p.degree() != d)
    throw MathRejection("wrong degree", what + " must be a nonzero form of degree " + std::to_string(d));
}

Point unit(const Field& f, int k) {
  Point e(3, f.zero());
  e[k] = f.one();
  return e;
}

// f restricted to {x_k = 0} as a binary form has three distinct roots.
bool meets_line_transversally(const MultiPoly& f, int k) {
  const Field fld = f.field();
  std::vector<MultiPoly> images;
  for (int i = 0; i < 3; ++i)
    images.push_back(i == k ? MultiPoly(fld, VarSet::Plane, 1) : MultiPoly::variable(fld, VarSet::Plane, i));
  MultiPoly r = f.substitute(images);
  if (r.is_zero()) return false;
  // Binary form in the two remaining variables; write it in t = second/first.
  int a = k == 0 ? 1 : 0, b = k == 2 ? 1 : 2;
  std::vector<Scalar> c(static_cast<std::size_t>(r.degree() + 1), fld.zero());
  for (const auto& [e, v] : r.terms()) c[e[b]] += v;
  UniPoly u(fld, c);
  (void)a;
  if (u.degree() < r.degree() - 1) return false;  // double root at infinity
  return gcd(u, u.derivative()).degree() == 0;
}

std::vector<std::vector<Scalar>> parse_matrix_a(const std::string& text, const Field& f) {
  std::vector<std::vector<Scalar>> a;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<Scalar> r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t s = cell.find_first_not_of(" \t"), e = cell.find_last_not_of(" \t");
      if (s == std::string::npos) throw std::invalid_argument("empty entry in A");
      mpq_class v;
      if (v.set_str(cell.substr(s, e - s + 1), 10) != 0 || v.get_den() == 0)
        throw std::invalid_argument("bad entry in A: '" + cell + "'");
      v.canonicalize();
      r.push_back(f.from_rational(v));
    }
    a.push_back(std::move(r));
  }
  if (a.size() != 3 || a[0].size() != 3 || a[1].size() != 3 || a[2].size() != 3)
    throw std::invalid_argument("A must be 3x3, rows separated by ';' and entries by ','");
  return a;
}

NamedExample finish(std::string name, Params params, const Params& defaults, SymDetRep rep,
                    std::optional<Highlights> expected) {
  NamedExample ex{std::move(name), params, std::move(rep), std::nullopt, {}};
  if (params == defaults) ex.expected = expected;
  return ex;
}

NamedExample build_ex42i(const Params& given) {
  const Params defaults{{"field", "fp:13"}, {"f", "x1^3 + x2^3 + x3^3"}};
  Params p = merge(defaults, given, "ex42i");
  Field fld = parse_field(p["field"]);
  MultiPoly f = P(p["f"], fld);
  require_degree(f, 3, "f");
  for (int k = 0; k < 3; ++k) {
    if (f.eval(unit(fld, k)).is_zero())
      throw MathRejection("cubic through a node of x1*x2*x3 = 0",
                          "f vanishes at " + point_to_string(unit(fld, k)));
    if (!meets_line_transversally(f, k))
      throw MathRejection("cubic not transverse to a coordinate line",
                          "f meets x" + std::to_string(k + 1) + " = 0 in fewer than three distinct points");
  }
  PolyMatrix4 m = from_strings({{{"0", "x1", "x2", "0"}, {"x1", "0", "x3", "0"}, {"x2", "x3", "0", "0"},
                                 {"0", "0", "0", "0"}}},
                               fld);
  m[3][3] = f;
  return finish("ex42i", p, defaults, SymDetRep::validate(m), Highlights{12, 9, 12, 0, 3, 3, false});
}

NamedExample build_ex42ii(const Params& given) {
  const Params defaults{{"field", "rational"},     {"l1", "x1"},
                        {"l2", "x2"},              {"l3", "x3"},
                        {"l4", "x1 + x2 + x3"},    {"l5", "x1 + 2*x2 + 3*x3"},
                        {"l6", "x1 + 3*x2 + 2*x3"}};
  Params p = merge(defaults, given, "ex42ii");
  Field fld = parse_field(p["field"]);
  std::vector<MultiPoly> l;
  for (int i = 1; i <= 6; ++i) {
    l.push_back(P(p["l" + std::to_string(i)], fld));
    require_degree(l.back(), 1, "l" + std::to_string(i));
  }
  auto coeffs = [&](const MultiPoly& line) {
    std::vector<Scalar> c;
    for (int v = 0; v < 3; ++v) c.push_back(line.derivative(v).eval(unit(fld, 0)));
    return c;
  };
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        if (determinant(ScalarMatrix::from_rows({coeffs(l[a]), coeffs(l[b]), coeffs(l[c])})).is_zero())
          throw MathRejection("lines not in general position", "l" + std::to_string(a + 1) + ", l" +
                                                                   std::to_string(b + 1) + ", l" +
                                                                   std::to_string(c + 1) + " are concurrent");
  PolyMatrix4 m = diagonal({l[0], l[1], l[2], l[3] * l[4] * l[5]});
  return finish("ex42ii", p, defaults, SymDetRep::validate(m), Highlights{15, 12, 12, 3, 0, 3, false});
}

NamedExample build_rmk31(const Params& given) {
  const Params defaults{{"field", "fp:13"}, {"f", "x1^3 + 2*x2^3 + 3*x3^3"}};
  Params p = merge(defaults, given, "rmk31");
  Field fld = parse_field(p["field"]);
  MultiPoly f = P(p["f"], fld);
  require_degree(f, 3, "f");
  if (f.eval(unit(fld, 2)).is_zero())
    throw MathRejection("cubic through the node", "f vanishes at the node (0:0:1) of the nodal cubic");
  PolyMatrix4 m = from_strings({{{"0", "x1", "x2", "0"}, {"x1", "-x3", "0", "0"}, {"x2", "0", "x1 + x3", "0"},
                                 {"0", "0", "0", "0"}}},
                               fld);
  m[3][3] = f;
  NamedExample ex = finish("rmk31", p, defaults, SymDetRep::validate(m), Highlights{1, 0, 1, 0, 1, 1, false});
  std::vector<std::vector<MultiPoly>> block;
  for (int i = 0; i < 3; ++i) block.emplace_back(m[i].begin(), m[i].begin() + 3);
  ex.notes.push_back("det of the 3x3 block: " + poly_determinant(block).to_string());
  return ex;
}

NamedExample build_ex43_quartic(const Params& given) {
  const Params defaults{{"field", "fp:13"},
                        {"l1", "-x1 + x2 + 2*x3"},
                        {"l2", "x1 + x3"},
                        {"l11", "x3"},
                        {"q1", "x1*x3 + x2^2"},
                        {"f", "x3*(2*x1^2 + 2*x1*x2 + 3*x2^2) + x1^3 - x2^3"}};
  Params p = merge(defaults, given, "ex43_quartic_two_lines");
  Field fld = parse_field(p["field"]);
  PolyMatrix4 m = from_strings({{{p["l1"], "0", "0", "0"},
                                 {"0", p["l2"], "0", "0"},
                                 {"0", "0", p["l11"], p["q1"]},
                                 {"0", "0", p["q1"], p["f"]}}},
                               fld);
  return finish("ex43_quartic_two_lines", p, defaults, SymDetRep::validate(m), Highlights{5, 4, 4, 1, 0, 1, false});
}

NamedExample build_ex43_quintic(const Params& given) {
  const Params defaults{{"field", "fp:13"},
                        {"l1", "2*x1 + x2 + x3"},
                        {"l11", "x3"},
                        {"l12", "2*x1 + x2"},
                        {"l22", "2*x2 + 2*x3"},
                        {"q1", "x1*x3 + x2^2"},
                        {"q2", "x2*x3 + x1^2"},
                        {"f", "x3*(2*x1^2 + 2*x1*x2 + 3*x2^2) + x1^3 - x2^3"}};
  Params p = merge(defaults, given, "ex43_quintic_line");
  Field fld = parse_field(p["field"]);
  PolyMatrix4 m = from_strings({{{p["l1"], "0", "0", "0"},
                                 {"0", p["l11"], p["l12"], p["q1"]},
                                 {"0", p["l12"], p["l22"], p["q2"]},
                                 {"0", p["q1"], p["q2"], p["f"]}}},
                               fld);
  return finish("ex43_quintic_line", p, defaults, SymDetRep::validate(m), Highlights{2, 1, 1, 1, 0, 1, false});
}

NamedExample build_ex43_fermat(const Params& given) {
  const Params defaults{{"field", "fp:17"}};
  Params p = merge(defaults, given, "ex43_fermat");
  Field fld = parse_field(p["field"]);
  if (!fld.is_finite() || fld.modulus() % 8 != 1)
    throw MathRejection("unsupported field", "this example needs F_q with q = 1 mod 8, so that i and omega exist");
  auto smallest_root = [&](const Scalar& v) {
    Scalar r = *v.sqrt();
    Scalar s = -r;
    return s < r ? s : r;
  };
  const Scalar i = smallest_root(fld.from_int(-1));
  const MultiPoly target = P("x1*(x1 + x2)", fld) * P("x1^4 + x2^4 + x3^4", fld);
  for (const Scalar& w2 : {i, -i}) {
    const Scalar w = smallest_root(w2);
    const std::string ws = w.to_string(), is = i.to_string();
    PolyMatrix4 m = from_strings({{{"-x1", "0", "0", "0"},
                                   {"0", "x1 + x2", "0", "0"},
                                   {"0", "0", "-(x1 - " + ws + "*x2)", "x3^2"},
                                   {"0", "0", "x3^2", "(x1 + " + ws + "*x2)*(x1^2 + " + is + "*x2^2)"}}},
                                 fld);
    std::vector<std::vector<MultiPoly>> rows;
    for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
    MultiPoly det = poly_determinant(rows);
    if (!(det == target || det == -target)) continue;
    NamedExample ex = finish("ex43_fermat", p, defaults, SymDetRep::validate(m), Highlights{5, 5, 5, 0, 0, 0, true});
    ex.notes.push_back("i = " + is + ", omega = " + ws + ", omega^2 = " + (w2 == i ? "i" : "-i"));
    return ex;
  }
  throw ConsistencyError("no choice of omega makes det M equal x1*(x1 + x2)*(x1^4 + x2^4 + x3^4)");
}

NamedExample build_prop44(const Params& given) {
  const Params defaults{{"field", "fp:13"}, {"A", "1,0,0;0,1,0;0,0,1"}};
  Params p = merge(defaults, given, "prop44");
  Field fld = parse_field(p["field"]);
  auto a = parse_matrix_a(p["A"], fld);
  Prop44Membership mem = prop44_membership(a);
  if (!mem.in_u) throw MathRejection("matrix not in U", mem.violated);
  PolyMatrix4 m = diagonal({P("x1", fld), P("x2", fld), P("x3", fld), -prop44_cubic(a)});
  NamedExample ex = finish("prop44", p, defaults, SymDetRep::validate(m), Highlights{12, 12, 12, 0, 0, 0, true});
  std::string plane;
  for (const auto& form : prop44_section_plane(a)) plane += (plane.empty() ? "" : ", ") + form.to_string() + " = 0";
  ex.notes.push_back("section plane: " + plane);
  return ex;
}

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> r{
      {"ex42i", build_ex42i},
      {"ex42ii", build_ex42ii},
      {"ex43_fermat", build_ex43_fermat},
      {"ex43_quartic_two_lines", build_ex43_quartic},
      {"ex43_quintic_line", build_ex43_quintic},
      {"prop44", build_prop44},
      {"rmk31", build_rmk31},
  };
  return r;
}

}  // namespace

std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

NamedExample build_example(const std::string& name, const Params& params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown example '" + name + "'");
  return it->second(params);
}

Field parse_field(const std::string& text) {
  if (text == "rational") return Field::rationals();
  std::string rest;
  if (text.rfind("fp:", 0) == 0) rest = text.substr(3);
  else if (text.rfind("fp ", 0) == 0) rest = text.substr(3);
  else throw std::invalid_argument("field must be 'rational' or 'fp:Q', got '" + text + "'");
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 10)
    throw std::invalid_argument("bad field modulus '" + rest + "'");
  unsigned long long q = std::stoull(rest);
  if (q > 0xffffffffULL) throw std::invalid_argument("field modulus too large");
  return Field::prime(static_cast<std::uint32_t>(q));
}

std::string field_spec(const Field& f) {
  return f.is_rational() ? "rational" : "fp:" + std::to_string(f.modulus());
}

MultiPoly prop44_cubic(const std::vector<std::vector<Scalar>>& a) {
  const Field fld = a[0][0].field();
  MultiPoly f(fld, VarSet::Plane, 3);
  for (int i = 0; i < 3; ++i) {
    MultiPoly row(fld, VarSet::Plane, 1);
    for (int j = 0; j < 3; ++j) row += MultiPoly::variable(fld, VarSet::Plane, j) * a[i][j];
    f += row * row * MultiPoly::variable(fld, VarSet::Plane, i);
  }
  return f;
}

std::vector<MultiPoly> prop44_section_plane(const std::vector<std::vector<Scalar>>& a) {
  const Field fld = a[0][0].field();
  std::vector<MultiPoly> out;
  for (int i = 0; i < 3; ++i) {
    MultiPoly form = MultiPoly::variable(fld, VarSet::Ambient, 3 + i);
    for (int j = 0; j < 3; ++j) form -= MultiPoly::variable(fld, VarSet::Ambient, j) * a[i][j];
    out.push_back(form);
  }
  return out;
}

Prop44Membership prop44_membership(const std::vector<std::vector<Scalar>>& a) {
  const Field fld = a[0][0].field();
  MultiPoly f = prop44_cubic(a);
  if (f.is_zero()) return {false, "f_A vanishes identically"};
  for (int k = 0; k < 3; ++k) {
    if (f.eval(unit(fld, k)).is_zero())
      return {false, "C'_A passes through the coordinate point " + point_to_string(unit(fld, k))};
    if (!meets_line_transversally(f, k))
      return {false, "C'_A meets x" + std::to_string(k + 1) + " = 0 in fewer than three distinct points"};
  }
  if (!certify_no_common_zeros({f.derivative(0), f.derivative(1), f.derivative(2)}))
    return {false, "C'_A is singular"};
  return {true, ""};
}

}  // namespace cubicplane
