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
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "cubicplane/fourfold.hpp"

namespace cubicplane {

namespace {

struct QuadTerm {
  std::uint8_t i, j;
  std::uint64_t c;
};

// One partial derivative of F, a quadratic form, as residue coefficients.
using CompiledQuadric = std::vector<QuadTerm>;

CompiledQuadric compile(const MultiPoly& quadric) {
  CompiledQuadric out;
  for (const auto& [e, c] : quadric.terms()) {
    std::uint8_t idx[2], n = 0;
    for (std::uint8_t v = 0; v < 6; ++v)
      for (int m = 0; m < e[v]; ++m) idx[n++] = v;
    out.push_back({idx[0], idx[1], c.residue_value()});
  }
  return out;
}

bool all_vanish(const std::vector<CompiledQuadric>& grad, const std::uint64_t* x, std::uint64_t q) {
  for (const auto& g : grad) {
    std::uint64_t acc = 0;
    for (const auto& t : g) acc += t.c * x[t.i] % q * x[t.j] % q;
    if (acc % q != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Point> brute_force_oracle(const MultiPoly& fourfold, unsigned threads) {
  const Field f = fourfold.field();
  if (!f.is_finite()) throw std::invalid_argument("the oracle needs a finite field");
  const std::uint64_t q = f.modulus();
  if (q * q * q * q * q > 1000000000ULL)
    throw std::invalid_argument("enumeration budget exceeded: q^5 must not exceed 10^9");
  if (threads == 0) threads = 1;

  std::vector<CompiledQuadric> grad;
  for (int v = 0; v < 6; ++v) grad.push_back(compile(fourfold.derivative(v)));

  std::vector<Point> found;
  for (int lead = 0; lead < 6; ++lead) {
    const int free = 5 - lead;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    std::vector<std::vector<Point>> parts(threads);
    auto work = [&](unsigned part) {
      const std::uint64_t lo = total * part / threads, hi = total * (part + 1) / threads;
      std::uint64_t x[6] = {0, 0, 0, 0, 0, 0};
      x[lead] = 1;
      for (std::uint64_t n = lo; n < hi; ++n) {
        std::uint64_t rest = n;
        for (int i = 5; i > lead; --i) {
          x[i] = rest % q;
          rest /= q;
        }
        if (!all_vanish(grad, x, q)) continue;
        Point p;
        for (int i = 0; i < 6; ++i) p.push_back(f.from_int(static_cast<long long>(x[i])));
        parts[part].push_back(std::move(p));
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& t : pool) t.join();
    }
    for (auto& part : parts) found.insert(found.end(), part.begin(), part.end());
  }
  // The partials vanishing forces F = 0 by Euler's relation when 3 is a
  // unit; check anyway so the result does not depend on that.
  std::vector<Point> out;
  for (auto& p : found)
    if (fourfold.eval(p).is_zero()) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubicplane
