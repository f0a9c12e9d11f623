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

#include "ecmss/algebra.hpp"
#include "ecmss/curve.hpp"

namespace ecmss {

/// Coefficient pairing context: the fixed combination W = alpha*G + beta*H
/// against which e(P, Q) = (r1 s2 - r2 s1) * W is formed. The all-zero
/// coefficient pair is excluded because it collapses every value to O.
struct SelfPairingCtx {
  TorsionBasis basis;
  Scalar alpha;
  Scalar beta;
  Point W;
};

/// Nonzero l-th root of unity in GF(q), used as an additive mask on secrets.
struct MaskValue {
  ExtFieldElement value;
};

SelfPairingCtx make_self_pairing_ctx(const TorsionBasis& basis, Scalar alpha, Scalar beta,
                                     const Curve& curve);

/// (r1 s2 - r2 s1 mod l) * W. Alternating and bilinear by construction.
Point self_pair(const CoordPoint& P, const CoordPoint& Q, const SelfPairingCtx& ctx,
                const Curve& curve);

/// Weil pairing on E[l] by Miller's algorithm. Divisors are shifted by a
/// random auxiliary point; evaluations that hit a zero or pole retry with a
/// fresh auxiliary (budget 32, then DegenerateEvaluation). The auxiliary
/// stream is derived from the input coordinates, so the function is pure.
ExtFieldElement weil_pair(const Point& P, const Point& Q, std::uint64_t l, const Curve& curve);

/// (x, y) -> (-x, u*y) for u^2 = -1; an automorphism exactly when B = 0.
Point distortion(const Point& P, const ExtFieldElement& u, const Curve& curve);

/// weil_pair(P, distortion(Q)). Non-degenerate on the diagonal: for the
/// curves this toolkit targets, modified_weil(P, P) has order exactly l for
/// every P != O, and a trivial diagonal value raises NonPrimitiveSelfValue.
MaskValue modified_weil(const Point& P, const Point& Q, std::uint64_t l, const Curve& curve,
                        const ExtFieldElement& u);

/// modified_weil(P0, i*P0) = modified_weil(P0, P0)^i. The index must be
/// nonzero mod l; a zero index would emit the constant 1 and unmask the
/// secret it protects.
MaskValue mask(const Point& P0, std::uint64_t i, std::uint64_t l, const Curve& curve,
               const ExtFieldElement& u);

/// Fourth root of unity u with u^2 = -1: g^((q-1)/4) for sampled g,
/// validated by squaring. BadDistortionUnit when 4 does not divide q - 1 or
/// no sample validates within the budget.
ExtFieldElement find_sqrt_minus_one(const FieldPtr& field, Rng& rng);

}  // namespace ecmss
