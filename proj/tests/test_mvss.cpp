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

#include <set>
#include <utility>

#include "doctest.h"
#include "ecmss/mvss.hpp"

using namespace ecmss;
using u64 = std::uint64_t;

namespace {

SystemParams big_params(u64 seed) {
  auto F = ext_field_new(47, 6);
  Curve curve(F, F->from_int(4), F->zero());
  Rng rng(seed);
  return setup_params(curve, 103, 103824, 1, rng);
}

SecretVector random_secrets(const SystemParams& params, u64 m, Rng& rng) {
  SecretVector K;
  for (u64 i = 0; i < m; ++i) K.K.push_back(params.curve.field->random_element(rng));
  return K;
}

}  // namespace

TEST_CASE("setup assembles a coherent parameter set") {
  auto params = big_params(11);
  CHECK(params.q == 10779215329ull);
  CHECK(params.l == 103);
  CHECK(scalar_mul(103, params.basis.G, params.curve).is_infinity());
  CHECK(params.ctx.W ==
        point_add(scalar_mul(static_cast<long long>(params.ctx.alpha.v), params.basis.G, params.curve),
                  scalar_mul(static_cast<long long>(params.ctx.beta.v), params.basis.H, params.curve),
                  params.curve));
  CHECK(params.u * params.u == -params.curve.field->one());
}

TEST_CASE("dealing fills the bulletin and passes its own verification") {
  auto params = big_params(12);
  Rng rng(100);
  auto K = random_secrets(params, 2, rng);
  auto res = deal(params, 2, 3, K, rng);

  CHECK(res.shares.size() == 3);
  CHECK(res.bulletin.V.size() == 3);
  CHECK(res.bulletin.R.size() == 2);
  CHECK(res.bulletin.threshold == 2);
  CHECK_FALSE(res.dealer.P0.is_infinity());
  CHECK(res.dealer.poly.a0() == res.dealer.a0);
  CHECK(res.dealer.poly.b0() == res.dealer.b0);
  for (const auto& sh : res.shares) CHECK(verify_share(sh, res.bulletin));

  CHECK_THROWS_AS(deal(params, 4, 3, K, rng), Error);   // t > n
  CHECK_THROWS_AS(deal(params, 1, 3, K, rng), Error);   // t < 2
  CHECK_THROWS_AS(deal(params, 2, 103, K, rng), Error); // n >= l
  CHECK_THROWS_AS(deal(params, 2, 3, SecretVector{}, rng), Error);
  Rng rng2(101);
  auto Kbig = random_secrets(params, 103, rng2);
  CHECK_THROWS_AS(deal(params, 2, 3, Kbig, rng2), Error);  // m >= l
}

TEST_CASE("verification rejects every single-coordinate perturbation") {
  auto params = big_params(13);
  Rng rng(200);
  auto K = random_secrets(params, 1, rng);
  auto res = deal(params, 2, 3, K, rng);

  // Exhaustive over all nonzero share-value offsets.
  for (u64 delta = 1; delta < 103; ++delta) {
    ShamirShare tam = res.shares[0];
    tam.s = tam.s + Scalar(delta, 103);
    CHECK_FALSE(verify_share(tam, res.bulletin));
  }
  // A share presented under another participant's index.
  ShamirShare swapped = res.shares[0];
  swapped.x = res.shares[1].x;
  CHECK_FALSE(verify_share(swapped, res.bulletin));
  // An index that was never assigned.
  ShamirShare alien = res.shares[0];
  alien.x = Scalar(55, 103);
  CHECK_THROWS_AS(verify_share(alien, res.bulletin), Error);
}

TEST_CASE("reconstruction is the inverse of dealing") {
  auto params = big_params(14);
  Rng rng(300);
  for (u64 m : {1ull, 2ull, 5ull, 20ull}) {
    auto K = random_secrets(params, m, rng);
    auto res = deal(params, 3, 5, K, rng);
    // Every 3-subset of the 5 shares.
    for (u64 bits = 0; bits < 32; ++bits) {
      if (__builtin_popcountll(bits) != 3) continue;
      std::vector<ShamirShare> subset;
      for (u64 j = 0; j < 5; ++j)
        if (bits & (1ull << j)) subset.push_back(res.shares[j]);
      auto got = reconstruct(subset, res.bulletin);
      REQUIRE(got.K.size() == m);
      for (u64 i = 0; i < m; ++i) CHECK(got.K[i] == K.K[i]);
    }
  }
}

TEST_CASE("more secrets than the threshold reconstruct fine") {
  // m > t is the capability the baseline scheme lacks.
  auto params = big_params(15);
  Rng rng(400);
  auto K = random_secrets(params, 7, rng);
  auto res = deal(params, 2, 4, K, rng);
  auto got = reconstruct({res.shares[1], res.shares[3]}, res.bulletin);
  REQUIRE(got.K.size() == 7);
  for (u64 i = 0; i < 7; ++i) CHECK(got.K[i] == K.K[i]);
}

TEST_CASE("cheater identification is exact, order-free, and fault-tolerant") {
  auto params = big_params(16);
  Rng rng(500);
  auto K = random_secrets(params, 2, rng);
  auto res = deal(params, 2, 4, K, rng);

  CHECK(identify_cheaters(res.shares, res.bulletin).empty());

  auto tamper = [&](std::size_t idx) {
    auto sh = res.shares[idx];
    sh.s = sh.s + Scalar(1, 103);
    return sh;
  };

  // Single corrupted submission among four.
  std::vector<ShamirShare> mixed = {res.shares[0], res.shares[1], tamper(2), res.shares[3]};
  auto cheats = identify_cheaters(mixed, res.bulletin);
  REQUIRE(cheats.size() == 1);
  CHECK(cheats[0] == 3);  // participant x = 3

  // Identification does not depend on submission order.
  std::vector<ShamirShare> shuffled = {tamper(2), res.shares[3], res.shares[0], res.shares[1]};
  CHECK(identify_cheaters(shuffled, res.bulletin) == cheats);

  // Nor on how many others cheat.
  std::vector<ShamirShare> two = {tamper(0), res.shares[1], tamper(2), res.shares[3]};
  auto both = identify_cheaters(two, res.bulletin);
  REQUIRE(both.size() == 2);
  CHECK(both[0] == 1);
  CHECK(both[1] == 3);

  std::vector<ShamirShare> all = {tamper(0), tamper(1), tamper(2), tamper(3)};
  CHECK(identify_cheaters(all, res.bulletin).size() == 4);

  // An unassigned index is reported as a cheater, not an error.
  ShamirShare alien = res.shares[0];
  alien.x = Scalar(77, 103);
  auto withalien = identify_cheaters({alien, res.shares[1]}, res.bulletin);
  REQUIRE(withalien.size() == 1);
  CHECK(withalien[0] == 77);
}

TEST_CASE("reconstruction outcomes under faults") {
  auto params = big_params(17);
  Rng rng(600);
  auto K = random_secrets(params, 2, rng);
  auto res = deal(params, 3, 5, K, rng);

  // Too few shares at all.
  CHECK_THROWS_AS(reconstruct({res.shares[0], res.shares[1]}, res.bulletin), Error);

  // Exactly t submitted, one corrupted: fatal, and the indices name him.
  auto bad = res.shares[1];
  bad.s = bad.s + Scalar(5, 103);
  try {
    reconstruct({res.shares[0], bad, res.shares[2]}, res.bulletin);
    FAIL("expected a cheater report");
  } catch (const CheaterError& e) {
    REQUIRE(e.cheaters().size() == 1);
    CHECK(e.cheaters()[0] == 2);
  }

  // t+1 submitted, one corrupted: the survivors carry the day.
  auto got = reconstruct({res.shares[0], bad, res.shares[2], res.shares[3]}, res.bulletin);
  CHECK(got.K[0] == K.K[0]);
  CHECK(got.K[1] == K.K[1]);

  // Tampered V0 turns up as inconsistency.
  auto forged = res.bulletin;
  forged.V0 = point_add(forged.V0, forged.params.ctx.W, forged.params.curve);
  CHECK_THROWS_AS(reconstruct({res.shares[0], res.shares[1], res.shares[2]}, forged), Error);
}

TEST_CASE("recovered point matches the dealer's secret point") {
  auto params = big_params(18);
  Rng rng(700);
  auto K = random_secrets(params, 1, rng);
  auto res = deal(params, 2, 4, K, rng);
  for (u64 a = 0; a < 4; ++a)
    for (u64 b = a + 1; b < 4; ++b) {
      auto rp = recover_point({res.shares[a], res.shares[b]}, 2, params);
      CHECK(rp.a0 == res.dealer.a0);
      CHECK(rp.b0 == res.dealer.b0);
      CHECK(rp.P0 == res.dealer.P0);
    }
  CHECK_THROWS_AS(recover_point({res.shares[0]}, 2, params), Error);
}

TEST_CASE("secret addition extends without re-dealing") {
  auto params = big_params(19);
  Rng rng(800);
  auto K = random_secrets(params, 2, rng);
  auto res = deal(params, 2, 3, K, rng);

  auto K3 = params.curve.field->random_element(rng);
  auto grown = add_secret(res.dealer, res.bulletin, K3);
  CHECK(grown.R.size() == 3);

  auto got = reconstruct({res.shares[0], res.shares[2]}, grown);
  REQUIRE(got.K.size() == 3);
  CHECK(got.K[0] == K.K[0]);
  CHECK(got.K[1] == K.K[1]);
  CHECK(got.K[2] == K3);

  // Shares did not change, and the original bulletin still works.
  auto old = reconstruct({res.shares[0], res.shares[1]}, res.bulletin);
  CHECK(old.K.size() == 2);

  // A dealer state from a different deal is refused.
  Rng other(801);
  auto res2 = deal(params, 2, 3, K, other);
  CHECK_THROWS_AS(add_secret(res2.dealer, res.bulletin, K3), Error);
}

TEST_CASE("sweeping the missing share leaves the secret point uniform") {
  auto params = big_params(20);
  Rng rng(900);
  auto K = random_secrets(params, 1, rng);
  auto res = deal(params, 2, 2, K, rng);

  std::set<std::pair<u64, u64>> coeff_pairs;
  std::set<std::string> points;
  std::set<std::string> masks;
  for (u64 v = 0; v < 103; ++v) {
    std::vector<ShamirShare> probe = {res.shares[0], {res.shares[1].x, Scalar(v, 103)}};
    auto rp = recover_point(probe, 2, params);
    coeff_pairs.insert({rp.a0.v, rp.b0.v});
    points.insert(point_to_string(rp.P0));
    masks.insert(mask(rp.P0, 1, 103, params.curve, params.u).value.to_hex());
  }
  CHECK(coeff_pairs.size() == 103);
  CHECK(points.size() == 103);
  // The candidate P0 walk is a line v -> v*L + C in the torsion plane, so
  // the diagonal pairing exponent is a quadratic in v with a nonzero lead
  // (primitivity). A quadratic's image over Z_l has (l+1)/2 values, so the
  // masks collapse from 103 candidates to exactly 52.
  CHECK(masks.size() == 52);
}
