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
#include <utility>
#include <vector>

#include "ecmss/curve.hpp"
#include "ecmss/pairing.hpp"

namespace ecmss {

/// Dealer material of the baseline point-sharing scheme: t coefficient
/// pairs (a', b'), all in [1, l-1], plus the pairing context they feed.
struct LiuDealerState {
  std::vector<Scalar> aprime;
  std::vector<Scalar> bprime;
  SelfPairingCtx ctx;
};

/// Per-participant share: row j of the Vandermonde products (A a', A b').
struct LiuShare {
  std::uint64_t j = 0;
  Scalar a;
  Scalar b;
};

/// Published record for one point secret: the blinding pair (c, d) and the
/// masked point R = (c b' - a' d) W + M.
struct LiuSecretEntry {
  Scalar c;
  Scalar d;
  Point R;
};

/// Dealer state with both coefficient vectors sampled from [1, l-1].
LiuDealerState liu_random_dealer(std::uint64_t t, const SelfPairingCtx& ctx, Rng& rng);

/// Shares for participants 1..n: (a_j, b_j) = row j of (A a', A b') with A
/// the n x t Vandermonde over Z_l.
std::vector<LiuShare> liu_distribute(const LiuDealerState& state, std::uint64_t t, std::uint64_t n);

/// One entry per secret point M_i: R_i = (c_i b'_i - a'_i d_i) W + M_i.
/// The scheme cannot publish more secrets than the threshold.
std::vector<LiuSecretEntry> liu_publish(const LiuDealerState& state,
                                        const std::vector<Point>& secrets,
                                        const std::vector<std::pair<Scalar, Scalar>>& cd,
                                        const Curve& curve);

/// Pairing of the entry's blinding point c G + d H against the share's
/// combination a_j G + b_j H: lands on (c_i b_j - a_j d_i) W.
Point liu_pseudo_share(const LiuSecretEntry& entry, const LiuShare& share,
                       const SelfPairingCtx& ctx, const Curve& curve);

/// Recovery of secret i (1-based) from pseudo-shares of the participants
/// js: T_i = sum_k (V^-1)_{i,k} SS_{i,j_k} with V the square Vandermonde
/// over js, and the result is R_i - T_i. Repeated participants make V
/// singular.
Point liu_reconstruct(std::uint64_t i, const std::vector<std::uint64_t>& js,
                      const std::vector<Point>& pseudo, const LiuSecretEntry& entry,
                      const SelfPairingCtx& ctx, const Curve& curve);

}  // namespace ecmss
