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

#include "cubicplane/univariate.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubicplane/errors.hpp"

namespace cubicplane {

UniPoly::UniPoly(Field field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::linear_root(const Scalar& r) { return UniPoly(r.field(), {-r, r.field().one()}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return c_[static_cast<std::size_t>(i)];
}

Scalar UniPoly::lead() const { return c_.empty() ? field_.zero() : c_.back(); }

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), a.field_.zero());
  for (int i = 0; i <= a.degree(); ++i) out[i] += a.c_[i];
  for (int i = 0; i <= b.degree(); ++i) out[i] += b.c_[i];
  return UniPoly(a.field_, std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  std::vector<Scalar> out(static_cast<std::size_t>(a.degree() + b.degree() + 1), a.field_.zero());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(a.field_, std::move(out));
}

UniPoly operator*(const UniPoly& a, const Scalar& s) {
  UniPoly r = a;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> out;
  for (int i = 1; i <= degree(); ++i) out.push_back(c_[i] * field_.from_int(i));
  return UniPoly(field_, std::move(out));
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

UniPoly UniPoly::shift_up(int k) const {
  if (is_zero()) return *this;
  std::vector<Scalar> out(static_cast<std::size_t>(k), field_.zero());
  out.insert(out.end(), c_.begin(), c_.end());
  return UniPoly(field_, std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string() + ")";
    if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Field f = a.field();
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
  Scalar inv = b.lead().inverse();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem[i].is_zero()) continue;
    Scalar k = rem[i] * inv;
    quo[i - b.degree()] = k;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= k * b.coeffs()[j];
  }
  return {UniPoly(f, std::move(quo)), UniPoly(f, std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    // Keep remainders monic to curb coefficient growth over Q.
    y = r.monic();
  }
  return x.monic();
}

UniPoly square_free_part(const UniPoly& f) {
  if (f.degree() <= 0) return f.is_zero() ? f : UniPoly::constant(f.field().one());
  UniPoly d = f.derivative();
  if (d.is_zero()) throw std::domain_error("derivative vanishes identically; characteristic too small");
  return exact_div(f, gcd(f, d)).monic();
}

UniPoly powmod(const UniPoly& a, std::uint64_t e, const UniPoly& m) {
  UniPoly result = divmod(UniPoly::constant(a.field().one()), m).second;
  UniPoly base = divmod(a, m).second;
  while (e > 0) {
    if (e & 1) result = divmod(result * base, m).second;
    e >>= 1;
    if (e > 0) base = divmod(base * base, m).second;
  }
  return result;
}

namespace {

void split_equal_degree(const UniPoly& g, std::mt19937_64& rng, std::vector<Scalar>& out) {
  if (g.degree() <= 0) return;
  Field f = g.field();
  if (g.degree() == 1) {
    UniPoly m = g.monic();
    out.push_back(-m.coeff(0));
    return;
  }
  const std::uint32_t q = f.modulus();
  std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
  for (;;) {
    UniPoly probe(f, {f.from_int(pick(rng)), f.one()});
    UniPoly h = gcd(powmod(probe, (q - 1) / 2, g) - UniPoly::constant(f.one()), g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_equal_degree(h, rng, out);
      split_equal_degree(exact_div(g, h), rng, out);
      return;
    }
  }
}

// Distinct roots of f in F_q.
std::vector<Scalar> finite_roots(const UniPoly& f) {
  Field fld = f.field();
  std::vector<Scalar> out;
  if (f.degree() <= 0) return out;
  const std::uint32_t q = fld.modulus();
  if (q <= 3) {
    for (std::uint32_t v = 0; v < q; ++v)
      if (f.eval(fld.from_int(v)).is_zero()) out.push_back(fld.from_int(v));
    return out;
  }
  UniPoly x(fld, {fld.zero(), fld.one()});
  UniPoly linear_part = gcd(powmod(x, q, f) - x, f);
  std::mt19937_64 rng(0x5eed);
  split_equal_degree(linear_part, rng, out);
  return out;
}

struct IntPoly {
  std::vector<mpz_class> a;  // low to high
};

// Primitive integer multiple of a rational polynomial.
IntPoly integerize(const UniPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, mpz_class(c.rational_value().get_den()));
  IntPoly p;
  mpz_class content = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c.rational_value() * den;
    p.a.push_back(v.get_num());
    content = gcd(content, v.get_num());
  }
  for (auto& v : p.a) v /= content;
  return p;
}

mpz_class eval_mod(const std::vector<mpz_class>& a, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

// n/d with n == d*r mod m, |n| <= bound_n, 0 < d <= bound_d, if it exists.
bool rational_reconstruct(const mpz_class& r, const mpz_class& m, const mpz_class& bound_n,
                          const mpz_class& bound_d, mpq_class& out) {
  mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (abs(r1) > bound_n) {
    mpz_class quo = r0 / r1;
    mpz_class tmp = r0 - quo * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quo * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound_d) return false;
  if (gcd(r1, t1) != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

// Distinct rational roots of a square-free polynomial over Q with s(0) != 0.
std::vector<Scalar> rational_roots_squarefree(const UniPoly& s) {
  std::vector<Scalar> out;
  if (s.degree() <= 0) return out;
  IntPoly ip = integerize(s);
  const std::size_t n = ip.a.size() - 1;
  std::vector<mpz_class> da;
  for (std::size_t i = 1; i <= n; ++i) da.push_back(ip.a[i] * static_cast<unsigned long>(i));

  // A prime keeping the degree and square-freeness.
  std::uint32_t p = 3;
  Field fp;
  UniPoly sp(fp);
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    mpz_class lc_mod = ip.a[n] % p;
    if (lc_mod == 0) continue;
    fp = Field::prime(p);
    std::vector<Scalar> cs;
    for (const auto& v : ip.a) {
      mpz_class r = v % p;
      cs.push_back(fp.from_int(r.get_si()));
    }
    sp = UniPoly(fp, cs);
    if (gcd(sp, sp.derivative()).degree() == 0) break;
  }

  const mpz_class bound_n = abs(ip.a[0]);
  const mpz_class bound_d = abs(ip.a[n]);
  const mpz_class target = 2 * bound_n * bound_d;
  for (const Scalar& r0 : finite_roots(sp)) {
    mpz_class m = p;
    mpz_class r = r0.residue_value();
    while (m <= target) {
      m = m * m;
      mpz_class fv = eval_mod(ip.a, r, m);
      mpz_class dv = eval_mod(da, r, m);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0)
        throw ConsistencyError("Hensel lift hit a non-invertible derivative");
      r = (r - fv * inv) % m;
      if (r < 0) r += m;
    }
    mpq_class cand;
    if (!rational_reconstruct(r, m, bound_n, bound_d, cand)) continue;
    Scalar v = Scalar::rational(cand);
    if (s.eval(v).is_zero()) out.push_back(v);
  }
  return out;
}

}  // namespace

UniRoots field_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  UniRoots res;
  res.residual_degree = f.degree();
  if (f.degree() <= 0) return res;
  std::vector<Scalar> distinct;
  if (f.field().is_finite()) {
    distinct = finite_roots(square_free_part(f));
  } else {
    UniPoly s = square_free_part(f);
    if (s.coeff(0).is_zero()) {
      distinct.push_back(f.field().zero());
      s = exact_div(s, UniPoly(f.field(), {f.field().zero(), f.field().one()}));
    }
    auto more = rational_roots_squarefree(s);
    distinct.insert(distinct.end(), more.begin(), more.end());
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (const Scalar& r : distinct) {
    UniPoly rest = f;
    UniPoly lin = UniPoly::linear_root(r);
    int mult = 0;
    for (;;) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult == 0) throw ConsistencyError("root finder returned a non-root");
    res.roots.emplace_back(r, mult);
    res.residual_degree -= mult;
  }
  return res;
}

}  // namespace cubicplane
