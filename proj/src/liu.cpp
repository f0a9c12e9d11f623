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

#include "ecmss/liu.hpp"

namespace ecmss {

using u64 = std::uint64_t;

LiuDealerState liu_random_dealer(u64 t, const SelfPairingCtx& ctx, Rng& rng) {
  const u64 l = ctx.basis.l;
  LiuDealerState state;
  state.ctx = ctx;
  state.aprime.reserve(t);
  state.bprime.reserve(t);
  for (u64 k = 0; k < t; ++k) {
    state.aprime.emplace_back(rng.nonzero_below(l), l);
    state.bprime.emplace_back(rng.nonzero_below(l), l);
  }
  return state;
}

std::vector<LiuShare> liu_distribute(const LiuDealerState& state, u64 t, u64 n) {
  if (state.aprime.size() != t || state.bprime.size() != t)
    fail(Errc::BadDims, "dealer state does not hold t coefficient pairs");
  const u64 l = state.ctx.basis.l;
  const MatZl A = vandermonde(n, t, l);  // rejects n < t and n >= l
  const auto as = A.mul_vec(state.aprime);
  const auto bs = A.mul_vec(state.bprime);
  std::vector<LiuShare> shares;
  shares.reserve(n);
  for (u64 j = 0; j < n; ++j) shares.push_back(LiuShare{j + 1, as[j], bs[j]});
  return shares;
}

std::vector<LiuSecretEntry> liu_publish(const LiuDealerState& state,
                                        const std::vector<Point>& secrets,
                                        const std::vector<std::pair<Scalar, Scalar>>& cd,
                                        const Curve& curve) {
  const u64 t = state.aprime.size();
  if (secrets.size() > t)
    fail(Errc::TooManySecrets, "the baseline scheme cannot share more secrets than the threshold");
  if (secrets.size() != cd.size()) fail(Errc::BadDims, "one (c, d) pair is needed per secret");
  std::vector<LiuSecretEntry> entries;
  entries.reserve(secrets.size());
  for (std::size_t i = 0; i < secrets.size(); ++i) {
    const Scalar c = cd[i].first;
    const Scalar d = cd[i].second;
    const Scalar k = c * state.bprime[i] - state.aprime[i] * d;
    const Point maskpt = scalar_mul(static_cast<long long>(k.v), state.ctx.W, curve);
    entries.push_back(LiuSecretEntry{c, d, point_add(maskpt, secrets[i], curve)});
  }
  return entries;
}

Point liu_pseudo_share(const LiuSecretEntry& entry, const LiuShare& share,
                       const SelfPairingCtx& ctx, const Curve& curve) {
  const auto Q = make_coord_point(entry.c, entry.d, ctx.basis, curve);
  const auto P = make_coord_point(share.a, share.b, ctx.basis, curve);
  return self_pair(Q, P, ctx, curve);
}

Point liu_reconstruct(u64 i, const std::vector<u64>& js, const std::vector<Point>& pseudo,
                      const LiuSecretEntry& entry, const SelfPairingCtx& ctx, const Curve& curve) {
  const u64 t = js.size();
  if (pseudo.size() != t || t == 0)
    fail(Errc::WrongShareCount, "need one pseudo-share per listed participant");
  const u64 l = ctx.basis.l;
  if (i == 0 || i > t) fail(Errc::OutOfRange, "secret index must be in 1..t");

  MatZl V;
  V.rows = V.cols = t;
  V.entries.reserve(t * t);
  for (u64 row = 0; row < t; ++row) {
    Scalar pw(1, l);
    const Scalar base(js[row] % l, l);
    for (u64 col = 0; col < t; ++col) {
      V.entries.push_back(pw);
      pw = pw * base;
    }
  }
  const MatZl Vinv = mat_inv(V);  // Singular on repeated participants

  Point T = Point::at_infinity();
  for (u64 k = 0; k < t; ++k) {
    const Scalar y = Vinv.at(i - 1, k);
    T = point_add(T, scalar_mul(static_cast<long long>(y.v), pseudo[k], curve), curve);
  }
  return point_sub(entry.R, T, curve);
}

}  // namespace ecmss
