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

#include "cubicplane/scalar.hpp"

#include <stdexcept>

namespace cubicplane {

namespace {

std::uint32_t mod_of(std::int64_t v, std::uint32_t q) {
  std::int64_t r = v % static_cast<std::int64_t>(q);
  if (r < 0) r += q;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t q) {
  std::uint64_t result = 1 % q;
  std::uint64_t b = base % q;
  while (e > 0) {
    if (e & 1) result = result * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible");
  if (t < 0) t += q;
  return static_cast<std::uint32_t>(t);
}

// Tonelli-Shanks; a must be a nonzero quadratic residue mod odd prime q.
std::uint32_t sqrt_mod(std::uint32_t a, std::uint32_t q) {
  if (q == 2) return a;
  if (q % 4 == 3) return pow_mod(a, (q + 1) / 4, q);
  std::uint32_t s = 0;
  std::uint64_t d = q - 1;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  std::uint32_t z = 2;
  while (pow_mod(z, (q - 1) / 2, q) != q - 1) ++z;
  std::uint32_t m = s;
  std::uint32_t c = pow_mod(z, d, q);
  std::uint32_t t = pow_mod(a, d, q);
  std::uint32_t r = pow_mod(a, (d + 1) / 2, q);
  while (t != 1) {
    std::uint32_t i = 0;
    std::uint32_t tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, q);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, q);
    m = i;
    c = mul_mod(b, b, q);
    t = mul_mod(t, c, q);
    r = mul_mod(r, b, q);
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t q) {
  if (q >= (1u << 31) || !is_prime(q))
    throw std::invalid_argument("field modulus must be a prime below 2^31, got " +
                                std::to_string(q));
  return Field(q);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (q_ == 0) return Scalar::rational(mpq_class(mpz_class(static_cast<long>(v))));
  return Scalar::residue(v, q_);
}

Scalar Field::from_rational(const mpq_class& v) const {
  return q_ == 0 ? Scalar::rational(v) : Scalar::rational(v).reduce_mod(q_);
}

std::string Field::name() const {
  return q_ == 0 ? std::string("rational") : "fp " + std::to_string(q_);
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s;
  v.canonicalize();
  s.v_ = std::move(v);
  return s;
}

Scalar Scalar::residue(std::int64_t v, std::uint32_t q) {
  Scalar s;
  s.q_ = q;
  s.r_ = mod_of(v, q);
  return s;
}

Field Scalar::field() const { return Field(q_); }

const mpq_class& Scalar::rational_value() const {
  if (q_ != 0) throw std::logic_error("rational_value() on a finite-field element");
  return v_;
}

std::uint32_t Scalar::residue_value() const {
  if (q_ == 0) throw std::logic_error("residue_value() on a rational");
  return r_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (q_ != o.q_)
    throw std::logic_error("mixed-field arithmetic: " + std::to_string(q_) + " vs " +
                           std::to_string(o.q_));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (q_ == 0)
    s.v_ = -v_;
  else
    s.r_ = r_ == 0 ? 0 : q_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (q_ == 0) {
    v_ += o.v_;
  } else {
    std::uint64_t s = static_cast<std::uint64_t>(r_) + o.r_;
    r_ = static_cast<std::uint32_t>(s >= q_ ? s - q_ : s);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (q_ == 0) {
    v_ -= o.v_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + (q_ - o.r_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (q_ == 0)
    v_ *= o.v_;
  else
    r_ = mul_mod(r_, o.r_, q_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s = *this;
  if (q_ == 0)
    s.v_ = 1 / v_;
  else
    s.r_ = inv_mod(r_, q_);
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar s = *this;
  if (q_ != 0) {
    s.r_ = pow_mod(r_, e, q_);
    return s;
  }
  mpz_pow_ui(s.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(s.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return s;
}

bool Scalar::is_square() const {
  if (q_ == 0) {
    if (sgn(v_) < 0) return false;
    return mpz_perfect_square_p(v_.get_num_mpz_t()) && mpz_perfect_square_p(v_.get_den_mpz_t());
  }
  if (r_ == 0 || q_ == 2) return true;
  return pow_mod(r_, (q_ - 1) / 2, q_) == 1;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (!is_square()) return std::nullopt;
  Scalar s = *this;
  if (q_ == 0) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
    s.v_ = mpq_class(n, d);
    s.v_.canonicalize();
  } else if (r_ != 0) {
    s.r_ = sqrt_mod(r_, q_);
  }
  return s;
}

Scalar Scalar::reduce_mod(std::uint32_t q) const {
  if (q_ != 0) {
    if (q_ != q) throw std::logic_error("cannot reduce an F_q element to another prime field");
    return *this;
  }
  mpz_class num = v_.get_num() % q;
  mpz_class den = v_.get_den() % q;
  if (den == 0)
    throw std::domain_error("denominator of " + v_.get_str() + " is divisible by " +
                            std::to_string(q));
  std::uint32_t n = mod_of(num.get_si(), q);
  std::uint32_t d = mod_of(den.get_si(), q);
  return residue(mul_mod(n, inv_mod(d, q), q), q);
}

std::string Scalar::to_string() const {
  if (q_ != 0) return std::to_string(r_);
  return v_.get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.q_ != b.q_) return false;
  return a.q_ == 0 ? a.v_ == b.v_ : a.r_ == b.r_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.q_ != b.q_) return a.q_ < b.q_;
  return a.q_ == 0 ? a.v_ < b.v_ : a.r_ < b.r_;
}

}  // namespace cubicplane
