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

#include "ecmss/mvss.hpp"

#include <algorithm>

namespace ecmss {

using u64 = std::uint64_t;

SystemParams setup_params(const Curve& curve, u64 l, u64 N, std::uint32_t k, Rng& rng) {
  SystemParams params{curve, curve.field->q(), l, k, {}, SelfPairingCtx{}, curve.field->zero()};
  params.basis = sample_generating_pair(curve, l, N, rng);
  Scalar alpha(0, l), beta(0, l);
  while (alpha.is_zero() && beta.is_zero()) {
    alpha = Scalar(rng.below(l), l);
    beta = Scalar(rng.below(l), l);
  }
  params.ctx = make_self_pairing_ctx(params.basis, alpha, beta, curve);
  params.u = find_sqrt_minus_one(curve.field, rng);
  return params;
}

namespace {

// e_{alpha,beta} of the coordinate pairs (r1, s1) and (r2, s2): the point
// (r1 s2 - r2 s1) W, without recomputing the cached combinations.
Point pair_by_coords(Scalar r1, Scalar s1, Scalar r2, Scalar s2, const SelfPairingCtx& ctx,
                     const Curve& curve) {
  const Scalar k = r1 * s2 - r2 * s1;
  return scalar_mul(static_cast<long long>(k.v), ctx.W, curve);
}

}  // namespace

DealResult deal(const SystemParams& params, u64 t, u64 n, const SecretVector& K, Rng& rng) {
  const u64 l = params.l;
  if (t < 2 || t > n || n >= l) fail(Errc::BadThreshold, "need 2 <= t <= n < l");
  const u64 m = K.K.size();
  if (m == 0) fail(Errc::BadDims, "at least one secret is required");
  if (m >= l) fail(Errc::TooManySecrets, "secret count must stay below l so every mask index is nonzero");
  for (const auto& k : K.K)
    if (!k.field()->same(*params.curve.field)) fail(Errc::DegreeMismatch, "secret lies in a different field");

  DealerState dealer;
  dealer.n = n;
  dealer.t = t;
  dealer.m = m;
  // Secret point coefficients; the all-zero pair would make P0 = O.
  do {
    dealer.a0 = Scalar(rng.below(l), l);
    dealer.b0 = Scalar(rng.below(l), l);
  } while (dealer.a0.is_zero() && dealer.b0.is_zero());
  dealer.P0 = make_coord_point(dealer.a0, dealer.b0, params.basis, params.curve).point;
  dealer.poly = make_poly(dealer.a0, dealer.b0, t, rng);
  dealer.c = Scalar(rng.nonzero_below(l), l);
  dealer.d = Scalar(rng.nonzero_below(l), l);

  std::vector<Scalar> xs;
  xs.reserve(n);
  for (u64 j = 1; j <= n; ++j) xs.emplace_back(j, l);
  auto shares = eval_shares(dealer.poly, xs);

  Bulletin bulletin{params, t, dealer.c, dealer.d, Point::at_infinity(), Point::at_infinity(), {}, {}, xs};
  bulletin.Qpt = make_coord_point(dealer.c, dealer.d, params.basis, params.curve).point;
  bulletin.V.reserve(n);
  for (const auto& sh : shares)
    bulletin.V.push_back(pair_by_coords(sh.x, sh.s, dealer.c, dealer.d, params.ctx, params.curve));
  bulletin.V0 = pair_by_coords(dealer.a0, dealer.b0, dealer.c, dealer.d, params.ctx, params.curve);

  bulletin.R.reserve(m);
  for (u64 i = 1; i <= m; ++i) {
    const auto msk = mask(dealer.P0, i, l, params.curve, params.u);
    bulletin.R.push_back(K.K[i - 1] - msk.value);
  }
  return DealResult{std::move(shares), std::move(bulletin), std::move(dealer)};
}

bool verify_share(const ShamirShare& share, const Bulletin& bulletin) {
  const auto& xs = bulletin.x_assign;
  auto it = std::find(xs.begin(), xs.end(), share.x);
  if (it == xs.end()) fail(Errc::UnknownParticipant, "share index " + std::to_string(share.x.v) + " was never assigned");
  const std::size_t idx = static_cast<std::size_t>(it - xs.begin());
  const Point v = pair_by_coords(share.x, share.s, bulletin.qc, bulletin.qd, bulletin.params.ctx,
                                 bulletin.params.curve);
  return v == bulletin.V[idx];
}

std::vector<u64> identify_cheaters(const std::vector<ShamirShare>& submitted, const Bulletin& bulletin) {
  std::vector<u64> out;
  for (const auto& sh : submitted) {
    bool ok;
    try {
      ok = verify_share(sh, bulletin);
    } catch (const Error&) {
      ok = false;  // claiming an unassigned index is itself cheating
    }
    if (!ok) out.push_back(sh.x.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SecretVector reconstruct(const std::vector<ShamirShare>& shares, const Bulletin& bulletin) {
  const auto& params = bulletin.params;
  const u64 threshold = bulletin.threshold;
  if (shares.size() < threshold)
    fail(Errc::NotEnoughShares, "need " + std::to_string(threshold) + " shares, got " +
                                    std::to_string(shares.size()));

  const auto cheaters = identify_cheaters(shares, bulletin);
  std::vector<ShamirShare> honest;
  for (const auto& sh : shares) {
    if (std::find(cheaters.begin(), cheaters.end(), sh.x.v) == cheaters.end()) honest.push_back(sh);
  }
  if (honest.size() < threshold)
    throw CheaterError(cheaters, "too few verified shares remain after removing cheaters");

  honest.resize(threshold);
  const auto rec = interpolate(honest, threshold);

  const Point v0 = pair_by_coords(rec.a0, rec.b0, bulletin.qc, bulletin.qd, params.ctx, params.curve);
  if (v0 != bulletin.V0)
    fail(Errc::InconsistentShares, "interpolated coefficients contradict the published consistency point");

  const Point P0 = make_coord_point(rec.a0, rec.b0, params.basis, params.curve).point;
  SecretVector K;
  K.K.reserve(bulletin.R.size());
  for (std::size_t i = 0; i < bulletin.R.size(); ++i) {
    const auto msk = mask(P0, static_cast<u64>(i + 1), params.l, params.curve, params.u);
    K.K.push_back(bulletin.R[i] + msk.value);
  }
  return K;
}

RecoveredPoint recover_point(const std::vector<ShamirShare>& shares, u64 t,
                             const SystemParams& params) {
  const auto rec = interpolate(shares, t);
  RecoveredPoint out{rec.a0, rec.b0, Point::at_infinity()};
  out.P0 = make_coord_point(rec.a0, rec.b0, params.basis, params.curve).point;
  return out;
}

Bulletin add_secret(const DealerState& dealer, const Bulletin& bulletin,
                    const ExtFieldElement& K_new) {
  const auto& params = bulletin.params;
  // The dealer state must describe exactly this bulletin.
  const Point v0 = pair_by_coords(dealer.a0, dealer.b0, dealer.c, dealer.d, params.ctx, params.curve);
  if (dealer.c != bulletin.qc || dealer.d != bulletin.qd || v0 != bulletin.V0 ||
      dealer.t != bulletin.threshold || dealer.n != bulletin.V.size() ||
      dealer.m != bulletin.R.size())
    fail(Errc::StateMismatch, "dealer state does not belong to this bulletin");
  const u64 next = dealer.m + 1;
  if (next % params.l == 0)
    fail(Errc::DegenerateIndex, "the next mask index would be 0 mod l");
  Bulletin out = bulletin;
  const auto msk = mask(dealer.P0, next, params.l, params.curve, params.u);
  out.R.push_back(K_new - msk.value);
  return out;
}

}  // namespace ecmss
