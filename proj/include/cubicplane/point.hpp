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

#ifndef CUBICPLANE_POINT_HPP
#define CUBICPLANE_POINT_HPP

#include <string>
#include <vector>

#include "cubicplane/scalar.hpp"

namespace cubicplane {

/// Projective point as a coordinate vector scaled so that the first nonzero
/// coordinate is 1. Lexicographic order on coordinates is the canonical
/// output order.
using Point = std::vector<Scalar>;

/// Scales to the canonical representative; throws std::invalid_argument
/// for the zero vector.
Point normalize(Point p);

/// "(1:-2:1)"
std::string point_to_string(const Point& p);

/// Index of the first nonzero coordinate.
int first_nonzero(const Point& p);

/// Embeds a point of the x-plane into P^5 as (a:b:c:0:0:0).
Point plane_c_to_p5(const Point& p);
/// Embeds a point of the u-plane into P^5 as (0:0:0:u1:u2:u3).
Point plane_p_to_p5(const Point& p);

Point reduce_point_mod(const Point& p, std::uint32_t q);

}  // namespace cubicplane

#endif  // CUBICPLANE_POINT_HPP
