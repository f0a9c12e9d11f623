// Copyright 2026 The ecmss Authors
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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ecmss/errors.hpp"
#include "ecmss/rng.hpp"

namespace ecmss {

class Rng;

// ---------------------------------------------------------------------------
// Z_p and GF(p^r)
// ---------------------------------------------------------------------------

/// Prime modulus. Primality is checked at construction (Miller-Rabin with a
/// witness set that is deterministic for 64-bit inputs); p must exceed 3.
struct PrimeField {
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime);
};

class ExtField;
using FieldPtr = std::shared_ptr<const ExtField>;

/// Element of GF(p^r), stored as a length-r coefficient vector mod p
/// (low-to-high) that is always fully reduced. Elements keep a handle to
/// their field; mixing fields raises DegreeMismatch.
class ExtFieldElement {
 public:
  ExtFieldElement() = default;
  ExtFieldElement(FieldPtr field, std::vector<std::uint64_t> coeffs);

  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  const FieldPtr& field() const { return f_; }

  bool is_zero() const;

  ExtFieldElement operator+(const ExtFieldElement& o) const;
  ExtFieldElement operator-(const ExtFieldElement& o) const;
  ExtFieldElement operator*(const ExtFieldElement& o) const;
  ExtFieldElement operator/(const ExtFieldElement& o) const;
  ExtFieldElement operator-() const;
  bool operator==(const ExtFieldElement& o) const;
  bool operator!=(const ExtFieldElement& o) const { return !(*this == o); }

  /// Multiplicative inverse; DivisionByZero on the zero element.
  ExtFieldElement inv() const;

  /// Exponentiation by a nonnegative integer.
  ExtFieldElement pow(std::uint64_t e) const;

  /// decode_secret: the base-p integer this element encodes.
  std::uint64_t to_base() const;

  /// Lowercase hex, base-p digits low-to-high, fixed width per digit.
  std::string to_hex() const;

 private:
  FieldPtr f_;
  std::vector<std::uint64_t> c_;
};

/// GF(p^r) described by a monic irreducible modulus polynomial over Z_p.
/// Construct through ext_field_new; instances are immutable and shared.
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  std::uint64_t p() const { return base_.p; }
  std::uint32_t r() const { return r_; }
  /// Cardinality p^r. Construction rejects parameters where this would not
  /// fit in 63 bits; the toolkit works at desk scale by design.
  std::uint64_t q() const { return q_; }
  /// Modulus coefficients, low-to-high, length r+1, leading coefficient 1.
  const std::vector<std::uint64_t>& modulus() const { return mod_; }

  ExtFieldElement zero() const;
  ExtFieldElement one() const;
  ExtFieldElement from_coeffs(std::vector<std::uint64_t> coeffs) const;
  /// Embeds an integer in [0, p) as the constant-coefficient element.
  ExtFieldElement from_int(std::uint64_t v) const;
  /// encode_secret: base-p digit encoding of raw < p^r. OutOfRange otherwise.
  ExtFieldElement from_base(std::uint64_t raw) const;
  ExtFieldElement parse_hex(const std::string& hex) const;
  ExtFieldElement random_element(Rng& rng) const;

  /// Hex characters used per base-p digit in the textual element encoding.
  std::uint32_t hex_digit_width() const { return hexw_; }

  bool same(const ExtField& o) const;

 private:
  friend FieldPtr ext_field_new(std::uint64_t p, std::uint32_t r,
                                const std::optional<std::vector<std::uint64_t>>& modulus);
  friend class ExtFieldElement;

  ExtField(PrimeField base, std::uint32_t r, std::vector<std::uint64_t> modulus);

  PrimeField base_;
  std::uint32_t r_;
  std::vector<std::uint64_t> mod_;
  std::uint64_t q_;
  std::uint32_t hexw_;
};

/// Builds GF(p^r). With no modulus given, picks the deterministic
/// lexicographically-least monic irreducible of degree r: candidates are
/// enumerated in increasing order of their non-leading coefficient vector
/// read as a base-p integer, so a given (p, r) always yields the same field.
FieldPtr ext_field_new(std::uint64_t p, std::uint32_t r,
                       const std::optional<std::vector<std::uint64_t>>& modulus = std::nullopt);

/// fe_inv per the module contract; identical to a.inv().
ExtFieldElement fe_inv(const ExtFieldElement& a);

bool is_prime_u64(std::uint64_t n);

// ---------------------------------------------------------------------------
// The scalar ring Z_l
// ---------------------------------------------------------------------------

/// Value in [0, l-1] tagged with its modulus. Arithmetic reduces eagerly;
/// operands with different moduli are a programming error.
struct Scalar {
  std::uint64_t v = 0;
  std::uint64_t l = 0;

  Scalar() = default;
  Scalar(std::uint64_t value, std::uint64_t modulus);

  /// Signed constructor, maps negatives into [0, l-1].
  static Scalar from_signed(long long value, std::uint64_t modulus);

  Scalar operator+(Scalar o) const;
  Scalar operator-(Scalar o) const;
  Scalar operator*(Scalar o) const;
  Scalar operator-() const;
  bool operator==(Scalar o) const { return v == o.v && l == o.l; }
  bool operator!=(Scalar o) const { return !(*this == o); }
  bool is_zero() const { return v == 0; }

  /// Multiplicative inverse mod l; DivisionByZero on zero.
  Scalar inv() const;
};

// ---------------------------------------------------------------------------
// Polynomials and matrices over Z_l
// ---------------------------------------------------------------------------

/// Dense polynomial, coefficients low-to-high. The length is part of the
/// value: sharing polynomials keep all their slots even when the leading
/// coefficient is zero.
struct PolyZl {
  std::vector<Scalar> coeffs;

  std::size_t slots() const { return coeffs.size(); }
  Scalar eval(Scalar x) const;

  bool operator==(const PolyZl& o) const;
};

struct MatZl {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> entries;  // row-major

  Scalar& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  static MatZl identity(std::size_t n, std::uint64_t l);
  MatZl mul(const MatZl& o) const;
  std::vector<Scalar> mul_vec(const std::vector<Scalar>& v) const;
  bool operator==(const MatZl& o) const;
};

/// Coefficients lambda_k with sum_k lambda_k g(x_k) = g(0) for every
/// polynomial g of degree < |xs|. The xs must be pairwise distinct and
/// nonzero.
std::vector<Scalar> lagrange_zero(const std::vector<Scalar>& xs);

/// n x t matrix with entry (j, k) = j^k mod l, j = 1..n, k = 0..t-1.
MatZl vandermonde(std::uint64_t n, std::uint64_t t, std::uint64_t l);

/// Gauss-Jordan inverse with exact modular arithmetic. Singular if not
/// invertible mod l.
MatZl mat_inv(const MatZl& m);

// ---------------------------------------------------------------------------
// Misc small helpers shared across modules
// ---------------------------------------------------------------------------

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

/// FNV-1a over a byte string; used for deal ids and derived seeds.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace ecmss
