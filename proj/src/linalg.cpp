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

#include "cubicplane/linalg.hpp"

namespace cubicplane {

KernelRankDet kernel_rank_det(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("kernel_rank_det needs a square matrix");
  Echelon<Scalar> e = row_reduce(m);
  return KernelRankDet{static_cast<int>(e.pivot_cols.size()), e.det, kernel_basis(m)};
}

}  // namespace cubicplane
