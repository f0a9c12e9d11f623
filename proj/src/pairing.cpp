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

#include "ecmss/pairing.hpp"

namespace ecmss {

using u64 = std::uint64_t;

SelfPairingCtx make_self_pairing_ctx(const TorsionBasis& basis, Scalar alpha, Scalar beta,
                                     const Curve& curve) {
  if (alpha.l != basis.l || beta.l != basis.l)
    fail(Errc::BasisMismatch, "coefficient modulus differs from the basis order");
  if (alpha.is_zero() && beta.is_zero())
    fail(Errc::IdentityPoint, "the all-zero coefficient pair is excluded");
  SelfPairingCtx ctx;
  ctx.basis = basis;
  ctx.alpha = alpha;
  ctx.beta = beta;
  ctx.W = point_add(scalar_mul(static_cast<long long>(alpha.v), basis.G, curve),
                    scalar_mul(static_cast<long long>(beta.v), basis.H, curve), curve);
  return ctx;
}

Point self_pair(const CoordPoint& P, const CoordPoint& Q, const SelfPairingCtx& ctx,
                const Curve& curve) {
  if (P.r.l != ctx.basis.l || Q.r.l != ctx.basis.l)
    fail(Errc::BasisMismatch, "coordinate modulus differs from the context basis");
  const Scalar k = P.r * Q.s - Q.r * P.s;
  return scalar_mul(static_cast<long long>(k.v), ctx.W, curve);
}

// ---------------------------------------------------------------------------
// Miller loop
// ---------------------------------------------------------------------------

namespace {

// Signals that an evaluation hit a zero or pole of a line function; the
// caller retries with a fresh auxiliary point.
struct MillerDegenerate {};

// (line through U and V, tangent when U = V, at X) divided by (vertical
// line through U + V at X). When U + V = O the whole function is the
// vertical line through U.
ExtFieldElement line_eval(const Point& U, const Point& V, const Point& X, const Curve& curve) {
  if (U.x == V.x && U.y == -V.y) {
    auto val = X.x - U.x;
    if (val.is_zero()) throw MillerDegenerate{};
    return val;
  }
  ExtFieldElement lambda;
  if (U == V) {
    const auto three = curve.field->from_int(3);
    const auto two = curve.field->from_int(2);
    lambda = (three * U.x * U.x + curve.A) / (two * U.y);
  } else {
    lambda = (V.y - U.y) / (V.x - U.x);
  }
  const auto num = X.y - U.y - lambda * (X.x - U.x);
  const auto den = X.x + U.x + V.x - lambda * lambda;
  if (num.is_zero() || den.is_zero()) throw MillerDegenerate{};
  return num / den;
}

// f_{l,P}(X) for l-torsion P, affine X.
ExtFieldElement miller_eval(const Point& P, const Point& X, u64 l, const Curve& curve) {
  ExtFieldElement f = curve.field->one();
  Point T = P;
  int hi = 63;
  while (hi > 0 && ((l >> hi) & 1) == 0) --hi;
  for (int i = hi - 1; i >= 0; --i) {
    f = f * f * line_eval(T, T, X, curve);
    T = point_add(T, T, curve);
    if ((l >> i) & 1) {
      f = f * line_eval(T, P, X, curve);
      T = point_add(T, P, curve);
    }
  }
  return f;
}

}  // namespace

ExtFieldElement weil_pair(const Point& P, const Point& Q, u64 l, const Curve& curve) {
  const auto one = curve.field->one();
  if (!scalar_mul(static_cast<long long>(l), P, curve).is_infinity() ||
      !scalar_mul(static_cast<long long>(l), Q, curve).is_infinity())
    fail(Errc::NotTorsion, "both inputs must lie in E[l]");
  if (P.is_infinity() || Q.is_infinity() || P == Q) return one;

  // Auxiliary points come from a stream derived from the inputs, keeping
  // the function deterministic without any global state.
  Rng aux(fnv1a64(point_to_string(P) + "|" + point_to_string(Q) + "|" + std::to_string(l)));
  const int budget = 32;
  for (int attempt = 0; attempt < budget; ++attempt) {
    Point S = random_point(curve, aux);
    if (S == P || S == point_neg(Q, curve)) continue;
    try {
      const Point QS = point_add(Q, S, curve);
      const Point PS = point_sub(P, S, curve);
      const Point negS = point_neg(S, curve);
      if (QS.is_infinity() || PS.is_infinity()) continue;
      const auto a1 = miller_eval(P, QS, l, curve);
      const auto a2 = miller_eval(P, S, l, curve);
      const auto b1 = miller_eval(Q, PS, l, curve);
      const auto b2 = miller_eval(Q, negS, l, curve);
      if (a2.is_zero() || b1.is_zero()) continue;
      return (a1 * b2) / (a2 * b1);
    } catch (const MillerDegenerate&) {
      continue;
    }
  }
  fail(Errc::DegenerateEvaluation, "no auxiliary point produced a clean evaluation");
}

Point distortion(const Point& P, const ExtFieldElement& u, const Curve& curve) {
  if (!curve.B.is_zero())
    fail(Errc::UnsupportedCurveForm, "distortion map requires the form y^2 = x^3 + Ax");
  if (u * u != -curve.field->one()) fail(Errc::BadDistortionUnit, "unit does not square to -1");
  if (P.is_infinity()) return P;
  return Point::affine(-P.x, u * P.y);
}

MaskValue modified_weil(const Point& P, const Point& Q, u64 l, const Curve& curve,
                        const ExtFieldElement& u) {
  const auto value = weil_pair(P, distortion(Q, u, curve), l, curve);
  if (P == Q && !P.is_infinity() && value == curve.field->one())
    fail(Errc::NonPrimitiveSelfValue, "diagonal pairing value is trivial; curve/distortion unsuitable");
  return MaskValue{value};
}

MaskValue mask(const Point& P0, u64 i, u64 l, const Curve& curve, const ExtFieldElement& u) {
  if (P0.is_infinity()) fail(Errc::IdentityPoint, "mask base point must not be O");
  if (i % l == 0) fail(Errc::DegenerateIndex, "mask index is 0 mod l, which would emit the constant 1");
  const Point iP = scalar_mul(static_cast<long long>(i % l), P0, curve);
  return modified_weil(P0, iP, l, curve, u);
}

ExtFieldElement find_sqrt_minus_one(const FieldPtr& field, Rng& rng) {
  const u64 q = field->q();
  if ((q - 1) % 4 != 0)
    fail(Errc::BadDistortionUnit, "4 does not divide q - 1; no fourth root of unity exists");
  const auto minus_one = -field->one();
  const int budget = 64;
  for (int attempt = 0; attempt < budget; ++attempt) {
    auto g = field->random_element(rng);
    if (g.is_zero()) continue;
    auto u = g.pow((q - 1) / 4);
    if (u * u == minus_one) return u;
  }
  fail(Errc::BadDistortionUnit, "no sampled element produced a square root of -1");
}

}  // namespace ecmss
