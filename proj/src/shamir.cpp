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

#include "ecmss/shamir.hpp"

namespace ecmss {

ShamirPoly make_poly(Scalar a0, Scalar b0, std::uint64_t t, Rng& rng) {
  if (t < 2) fail(Errc::ThresholdTooSmall, "threshold must be at least 2: the two secrets need distinct slots");
  if (a0.l != b0.l) fail(Errc::BadDims, "secret slots use different moduli");
  const std::uint64_t l = a0.l;
  ShamirPoly poly;
  poly.t = t;
  poly.coeffs.coeffs.reserve(t);
  poly.coeffs.coeffs.push_back(a0);
  for (std::uint64_t k = 1; k + 1 < t; ++k) poly.coeffs.coeffs.push_back(Scalar(rng.nonzero_below(l), l));
  poly.coeffs.coeffs.push_back(b0);
  return poly;
}

std::vector<ShamirShare> eval_shares(const ShamirPoly& poly, const std::vector<Scalar>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) fail(Errc::ZeroX, "evaluation at x = 0 would reveal the constant secret");
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) fail(Errc::DuplicateX, "share indices must be unique within a deal");
  }
  std::vector<ShamirShare> out;
  out.reserve(xs.size());
  for (const Scalar& x : xs) out.push_back(ShamirShare{x, poly.coeffs.eval(x)});
  return out;
}

ShamirRecovery interpolate(const std::vector<ShamirShare>& shares, std::uint64_t t) {
  if (shares.size() != t)
    fail(Errc::WrongShareCount, "interpolation needs exactly " + std::to_string(t) + " shares, got " +
                                    std::to_string(shares.size()));
  if (t == 0) fail(Errc::WrongShareCount, "threshold zero has no interpolant");
  const std::uint64_t l = shares.front().x.l;
  for (std::size_t i = 0; i < shares.size(); ++i)
    for (std::size_t j = i + 1; j < shares.size(); ++j)
      if (shares[i].x == shares[j].x) fail(Errc::DuplicateX, "repeated share index");

  // Master polynomial M(x) = prod (x - x_i), low-to-high.
  std::vector<Scalar> master{Scalar(1, l)};
  for (const auto& sh : shares) {
    std::vector<Scalar> next(master.size() + 1, Scalar(0, l));
    for (std::size_t k = 0; k < master.size(); ++k) {
      next[k + 1] = next[k + 1] + master[k];
      next[k] = next[k] - master[k] * sh.x;
    }
    master = std::move(next);
  }

  std::vector<Scalar> acc(t, Scalar(0, l));
  for (const auto& sh : shares) {
    // N_j = M / (x - x_j) by synthetic division; exact since x_j is a root.
    std::vector<Scalar> num(t, Scalar(0, l));
    Scalar carry(0, l);
    for (std::size_t k = master.size(); k-- > 1;) {
      carry = master[k] + carry * sh.x;
      num[k - 1] = carry;
    }
    Scalar denom(1, l);
    for (const auto& other : shares) {
      if (other.x == sh.x) continue;
      denom = denom * (sh.x - other.x);
    }
    const Scalar scale = sh.s * denom.inv();
    for (std::size_t k = 0; k < t; ++k) acc[k] = acc[k] + num[k] * scale;
  }

  ShamirRecovery rec;
  rec.a0 = acc.front();
  rec.b0 = acc.back();
  rec.coeffs.coeffs = std::move(acc);
  return rec;
}

}  // namespace ecmss
