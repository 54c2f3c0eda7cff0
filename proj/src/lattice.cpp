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

#include "cubicplane/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "cubicplane/linalg.hpp"

namespace cubicplane {

namespace {

// Class labels: 0 is P; (couple, member) otherwise.
struct PlaneClass {
  int couple;  // 0 for P
  int member;  // 1 or 2
};

long product(const PlaneClass& a, const PlaneClass& b) {
  if (a.couple == b.couple && a.member == b.member) return products::kPP;
  if (a.couple == 0 || b.couple == 0) return products::kPlaneWithP;
  if (a.couple == b.couple) return products::kWithinCouple;
  return products::kAcrossCouples;
}

}  // namespace

mpz_class integer_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
    prev = a[k][k];
  }
  return negate ? mpz_class(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

Ns2Report ns2_gram(int m) {
  if (m < 1) throw std::invalid_argument("the number of couples must be at least 1");
  std::vector<PlaneClass> classes{{0, 0}, {1, 2}};
  for (int i = 1; i <= m; ++i) classes.push_back({i, 1});
  Ns2Report r;
  r.m = m;
  r.class_count = 2 * m + 1;
  r.rank_lower_bound = m + 2;
  const std::size_t n = classes.size();
  std::vector<std::vector<mpz_class>> z(n, std::vector<mpz_class>(n));
  ScalarMatrix q(n, n, Field::rationals().zero());
  r.gram.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.gram[i][j] = product(classes[i], classes[j]);
      z[i][j] = r.gram[i][j];
      q(i, j) = Field::rationals().from_int(r.gram[i][j]);
    }
  r.det = integer_determinant(std::move(z));
  r.rank = static_cast<int>(rank(q));
  return r;
}

}  // namespace cubicplane
