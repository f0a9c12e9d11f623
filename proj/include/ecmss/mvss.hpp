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

#include "ecmss/curve.hpp"
#include "ecmss/pairing.hpp"
#include "ecmss/shamir.hpp"

namespace ecmss {

/// Public system material: the curve, the torsion basis, the pairing
/// context, and the distortion unit used for recovery masks.
struct SystemParams {
  Curve curve;
  std::uint64_t q = 0;  // field size
  std::uint64_t l = 0;  // torsion order, prime
  std::uint32_t k = 1;  // extension step from q to the torsion field
  TorsionBasis basis;
  SelfPairingCtx ctx;
  ExtFieldElement u;
};

/// Everything the dealer keeps private after a deal. Needed again only
/// when appending a secret.
struct DealerState {
  Scalar a0;
  Scalar b0;
  Point P0;
  ShamirPoly poly;
  Scalar c;
  Scalar d;
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  std::uint64_t m = 0;
};

/// Public notice-board state for one deal: the challenge pair and its
/// point, the consistency point V0, one verification point per
/// participant, and one recovery code per secret.
struct Bulletin {
  SystemParams params;
  std::uint64_t threshold = 0;  // t; public bookkeeping, needed to place b0
  Scalar qc;  // published challenge scalars; Qpt = qc*G + qd*H
  Scalar qd;
  Point Qpt;
  Point V0;
  std::vector<Point> V;
  std::vector<ExtFieldElement> R;
  std::vector<Scalar> x_assign;
};

struct SecretVector {
  std::vector<ExtFieldElement> K;
};

struct DealResult {
  std::vector<ShamirShare> shares;
  Bulletin bulletin;
  DealerState dealer;
};

struct RecoveredPoint {
  Scalar a0;
  Scalar b0;
  Point P0;
};

/// Assembles public parameters: samples a torsion basis, a nonzero
/// coefficient pair for the combination point W, and a distortion unit.
SystemParams setup_params(const Curve& curve, std::uint64_t l, std::uint64_t N, std::uint32_t k,
                          Rng& rng);

/// Full dealing step: sharing polynomial with the secret point's
/// coefficients in the two secret slots, shares at x = 1..n, verification
/// points V_i = (x_i d - c S_i) W, consistency point V0, and recovery
/// codes R_i = K_i - mask(P0, i).
DealResult deal(const SystemParams& params, std::uint64_t t, std::uint64_t n,
                const SecretVector& K, Rng& rng);

/// Accept iff the share's pairing against the challenge point reproduces
/// the published V entry for its x.
bool verify_share(const ShamirShare& share, const Bulletin& bulletin);

/// Participant indices (x values) whose submissions fail verification,
/// sorted ascending. Shares claiming an unassigned x are reported too.
std::vector<std::uint64_t> identify_cheaters(const std::vector<ShamirShare>& submitted,
                                             const Bulletin& bulletin);

/// Single-stage recovery of every secret: filters cheaters, interpolates
/// the first t surviving shares, replays the V0 consistency check, and
/// unmasks all recovery codes.
SecretVector reconstruct(const std::vector<ShamirShare>& shares, const Bulletin& bulletin);

/// Interpolation outputs plus the secret point they determine.
RecoveredPoint recover_point(const std::vector<ShamirShare>& shares, std::uint64_t t,
                             const SystemParams& params);

/// Appends one recovery code for K_new at index m+1; shares and all
/// existing codes are untouched. The dealer state must belong to the
/// bulletin being extended.
Bulletin add_secret(const DealerState& dealer, const Bulletin& bulletin,
                    const ExtFieldElement& K_new);

}  // namespace ecmss
