// Copyright 2026 The qmat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMAT_FIELD_H_
#define QMAT_FIELD_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qmat {

// Field elements are coefficient vectors over the base field F_q in the power
// basis 1, w, w^2, ... of the extension, packed as base-q digits with the
// constant coefficient least significant. Base-field elements F_q are in turn
// polynomials over F_p modulo the base modulus, packed as base-p digits. The
// constant elements of GF(q^m) therefore have the same code as in F_q.
using Elem = std::uint32_t;

// Little-endian coefficient lists: x^4 + x + 1 <-> {1, 1, 0, 0, 1}.
struct Moduli {
  std::vector<std::uint32_t> base;  // degree k over F_p
  std::vector<std::uint32_t> ext;   // degree m over F_q (entries are F_q codes)
};

// GF(q^m) with q = p^k, stored flat with a marked subfield F_q.
//
// Construction validates both moduli (irreducible, and the extension modulus
// primitive so that the class of x is a generator w of the multiplicative
// group) and builds log/antilog tables eagerly. Instances are immutable and
// safe for concurrent use.
class Field {
 public:
  // Order bound for table-backed fields.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  // Throws Error{kNonPrimeCharacteristic, kReducibleModulus,
  // kNonPrimitiveModulus, kNoDefaultModulus, kFieldTooLarge}.
  static std::shared_ptr<const Field> make(
      std::uint32_t p, std::uint32_t k, std::uint32_t m,
      std::optional<Moduli> moduli = std::nullopt);

  // The base field F_q (m = 1) with default moduli, cached per q.
  static std::shared_ptr<const Field> base_field(std::uint32_t q);

  // Default moduli for (p, k, m); nullopt when p^(km) exceeds kMaxOrder.
  static std::optional<Moduli> default_moduli(std::uint32_t p, std::uint32_t k,
                                              std::uint32_t m);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t base_degree() const { return k_; }
  std::uint32_t ext_degree() const { return m_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t order() const { return order_; }
  const Moduli& moduli() const { return moduli_; }
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= order_ - 1) e -= order_ - 1;
    return exp_[e];
  }
  Elem inv(Elem a) const;  // throws kDivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  // w, the class of x modulo the extension modulus.
  Elem omega() const { return exp_[order_ == 2 ? 0 : 1]; }
  // w^i for any integer i (reduced mod q^m - 1).
  Elem primitive_power(std::int64_t i) const;
  // Discrete log base w; throws kDivisionByZero for 0.
  std::uint32_t log(Elem a) const;

  // Frobenius a -> a^(p^j).
  Elem frobenius(Elem a, std::uint32_t j) const;

  // Membership in F_q by the coefficient test.
  bool in_base_field(Elem a) const { return a < q_; }
  // Membership in F_q by the fixed-point test a^q = a.
  bool frobenius_fixed(Elem a) const { return pow(a, q_) == a; }

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  bool operator==(const Field& other) const;

 private:
  Field(std::uint32_t p, std::uint32_t k, std::uint32_t m, Moduli moduli);

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::uint32_t order_;
  Moduli moduli_;
  // F_q tables.
  std::vector<std::uint32_t> base_add_;
  std::vector<std::uint32_t> base_neg_;
  // GF(q^m) log/antilog tables.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

// {1, ..., q^m - 2} minus the multiples of (q^m - 1)/(q - 1): the exponents i
// with w^i outside F_q. Throws kExtensionRequired when m < 2.
std::vector<std::int64_t> omega_index_set(const Field& field);

// A field element bound to its field; arithmetic across fields throws
// kFieldMismatch.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElem inv() const;
  FieldElem pow(std::int64_t e) const;
  bool in_base_field() const { return field_->in_base_field(value_); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  FieldPtr field_;
  Elem value_;
};

bool is_prime(std::uint32_t p);

}  // namespace qmat

#endif  // QMAT_FIELD_H_
