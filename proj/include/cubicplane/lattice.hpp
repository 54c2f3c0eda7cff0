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

#ifndef CUBICPLANE_LATTICE_HPP
#define CUBICPLANE_LATTICE_HPP

#include <gmpxx.h>

#include <vector>

namespace cubicplane {

/// Intersection products between plane classes in NS_2.
namespace products {
constexpr int kPP = 3;             // P.P, and any plane with itself
constexpr int kQP = -2;            // general fiber quadric with P
constexpr int kPlaneWithP = -1;    // P_{i,j}.P
constexpr int kWithinCouple = -1;  // P_{i,1}.P_{i,2}
constexpr int kAcrossCouples = 1;  // P_{i,k}.P_{j,h}, i != j
}  // namespace products

struct Ns2Report {
  int m = 0;
  int class_count = 0;
  std::vector<std::vector<long>> gram;  // order P, P_{1,2}, P_{1,1}, ..., P_{m,1}
  mpz_class det;
  int rank = 0;
  int rank_lower_bound = 0;
};

/// Gram matrix of the plane classes spanned by P, P_{1,2} and P_{i,1}.
/// Throws std::invalid_argument for m < 1.
Ns2Report ns2_gram(int m);

/// Exact integer determinant by fraction-free elimination.
mpz_class integer_determinant(std::vector<std::vector<mpz_class>> a);

}  // namespace cubicplane

#endif  // CUBICPLANE_LATTICE_HPP
