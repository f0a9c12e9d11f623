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
#include <vector>

#include "ecmss/algebra.hpp"

namespace ecmss {

/// Sharing polynomial with two secret slots: the constant term and the
/// leading term. The coefficient vector always has exactly t entries, even
/// when the leading value is zero; the slot layout is the contract, not the
/// numeric degree.
struct ShamirPoly {
  std::uint64_t t = 0;
  PolyZl coeffs;  // coeffs.slots() == t; [0] and [t-1] are the secrets

  Scalar a0() const { return coeffs.coeffs.front(); }
  Scalar b0() const { return coeffs.coeffs.back(); }
};

struct ShamirShare {
  Scalar x;  // public evaluation index, nonzero, unique within a deal
  Scalar s;  // f(x) mod l
};

/// Full result of interpolation: both secret slots plus the whole
/// coefficient vector (consistency checks need the middle coefficients).
struct ShamirRecovery {
  Scalar a0;
  Scalar b0;
  PolyZl coeffs;
};

/// coeffs[0] = a0, coeffs[t-1] = b0, middle slots uniform in [1, l-1].
/// t must be at least 2 so the two secrets occupy distinct slots.
ShamirPoly make_poly(Scalar a0, Scalar b0, std::uint64_t t, Rng& rng);

/// Horner evaluation at each x. The xs must be distinct and nonzero
/// (x = 0 would hand out the constant secret directly).
std::vector<ShamirShare> eval_shares(const ShamirPoly& poly, const std::vector<Scalar>& xs);

/// Unique degree-(t-1) interpolant through exactly t shares.
ShamirRecovery interpolate(const std::vector<ShamirShare>& shares, std::uint64_t t);

}  // namespace ecmss
