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

#ifndef CUBICPLANE_SCALAR_HPP
#define CUBICPLANE_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace cubicplane {

class Scalar;

/// The coefficient field of a computation: exact rationals or a prime field F_q.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless q is a prime below 2^31.
  static Field prime(std::uint32_t q);

  bool is_rational() const { return q_ == 0; }
  bool is_finite() const { return q_ != 0; }
  std::uint32_t modulus() const { return q_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Rationals map to residues when the field is finite; throws
  /// std::domain_error if the denominator is divisible by q.
  Scalar from_rational(const mpq_class& v) const;

  /// "rational" or "fp Q" -- the spelling used by rep files.
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t q) : q_(q) {}
  std::uint32_t q_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a Field. Rationals are kept reduced with positive
/// denominator; residues are kept in [0, q).
class Scalar {
 public:
  Scalar() = default;

  static Scalar rational(mpq_class v);
  static Scalar residue(std::int64_t v, std::uint32_t q);

  Field field() const;
  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return q_ == 0 ? sgn(v_) == 0 : r_ == 0; }
  bool is_one() const { return q_ == 0 ? v_ == 1 : r_ == 1; }

  const mpq_class& rational_value() const;
  std::uint32_t residue_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  bool is_square() const;
  std::optional<Scalar> sqrt() const;

  /// Image of a rational in F_q; identity on elements already in F_q.
  Scalar reduce_mod(std::uint32_t q) const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for canonical sorting: numeric for rationals, by
  /// residue for F_q.
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  void check_same_field(const Scalar& o) const;

  std::uint32_t q_ = 0;
  std::uint32_t r_ = 0;
  mpq_class v_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline Scalar zero_like(const Scalar& s) { return s.field().zero(); }
inline Scalar one_like(const Scalar& s) { return s.field().one(); }
inline Scalar lift_to(const Scalar& s, const Scalar&) { return s; }
inline std::string to_string(const Scalar& s) { return s.to_string(); }

}  // namespace cubicplane

#endif  // CUBICPLANE_SCALAR_HPP
