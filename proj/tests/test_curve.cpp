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

#include "doctest.h"
#include "ecmss/curve.hpp"
#include "ecmss/pairing.hpp"

using namespace ecmss;
using u64 = std::uint64_t;

namespace {

Curve base47() {
  auto F = ext_field_new(47, 1);
  return Curve(F, F->from_int(4), F->zero());
}

Curve big47() {
  auto F = ext_field_new(47, 6);
  return Curve(F, F->from_int(4), F->zero());
}

Curve toy11() {
  auto F = ext_field_new(11, 2);
  return Curve(F, F->one(), F->zero());
}

}  // namespace

TEST_CASE("curve construction rejects singular parameters") {
  auto F = ext_field_new(47, 1);
  CHECK_THROWS_AS(Curve(F, F->zero(), F->zero()), Error);  // y^2 = x^3
  // 4*(-3)^3 + 27*2^2 = 0
  CHECK_THROWS_AS(Curve(F, -F->from_int(3), F->from_int(2)), Error);
  CHECK_NOTHROW(Curve(F, F->from_int(4), F->zero()));
}

TEST_CASE("chord and tangent oracles on the base curve") {
  auto C = base47();
  auto& F = C.field;
  const Point P = Point::affine(F->from_int(2), F->from_int(4));
  REQUIRE(C.contains(P));

  // Frozen: doubling lands on the 2-torsion point (0, 0).
  const Point D = point_add(P, P, C);
  REQUIRE_FALSE(D.is_infinity());
  CHECK(D.x == F->zero());
  CHECK(D.y == F->zero());

  // Identity and inverse branches.
  CHECK(point_add(P, Point::at_infinity(), C) == P);
  CHECK(point_add(Point::at_infinity(), P, C) == P);
  const Point negP = Point::affine(F->from_int(2), -F->from_int(4));
  CHECK(point_add(P, negP, C).is_infinity());
  CHECK(point_neg(P, C) == negP);

  // 4P = O since 2P has order 2.
  CHECK(scalar_mul(4, P, C).is_infinity());
  CHECK(scalar_mul(0, P, C).is_infinity());
  CHECK(scalar_mul(-1, P, C) == negP);
  CHECK(scalar_mul(2, negP, C) == D);
  CHECK(point_sub(P, P, C).is_infinity());
}

TEST_CASE("off-curve inputs are rejected") {
  auto C = base47();
  auto& F = C.field;
  const Point bad = Point::affine(F->from_int(1), F->from_int(1));
  REQUIRE_FALSE(C.contains(bad));
  CHECK_THROWS_AS(point_add(bad, bad, C), Error);
  CHECK_THROWS_AS(scalar_mul(2, bad, C), Error);
  CHECK_THROWS_AS(point_neg(bad, C), Error);
}

TEST_CASE("point counting over the prime field") {
  CHECK(count_points_prime(4, 0, 47) == 48);
  CHECK(count_points_prime(1, 0, 11) == 12);
  // Sanity: Hasse bound for a handful of small curves.
  for (u64 p : {5ull, 7ull, 13ull}) {
    u64 n = count_points_prime(2, 3, p);
    long long t = static_cast<long long>(p) + 1 - static_cast<long long>(n);
    CHECK(t * t <= 4 * static_cast<long long>(p));
  }
}

TEST_CASE("order over extensions by trace recursion") {
  CHECK(order_over_extension(48, 47, 1) == 48);
  CHECK(order_over_extension(48, 47, 2) == 2304);
  CHECK(order_over_extension(48, 47, 6) == 10779422976ull);  // = 103824^2
  CHECK(order_over_extension(12, 11, 2) == 144);             // = 12^2
}

TEST_CASE("square roots in extension fields") {
  Rng rng(2024);
  // s = 5 branch (47^6 - 1 = 2^5 * odd).
  auto F6 = ext_field_new(47, 6);
  for (int i = 0; i < 30; ++i) {
    auto a = F6->random_element(rng);
    auto sq = a * a;
    auto root = field_sqrt(sq, rng);
    REQUIRE(root.has_value());
    CHECK((*root == a || *root == -a));
  }
  // s = 3 branch (121 - 1 = 2^3 * 15).
  auto F2 = ext_field_new(11, 2);
  int residues = 0;
  for (u64 v = 1; v < F2->q(); ++v) {
    auto a = F2->from_base(v);
    auto root = field_sqrt(a, rng);
    if (root) {
      ++residues;
      CHECK(*root * *root == a);
    }
  }
  CHECK(residues == 60);  // (q - 1) / 2 squares among the nonzero elements
  // s = 1 shortcut branch (47 - 1 = 2 * 23).
  auto F1 = ext_field_new(47, 1);
  auto nine = F1->from_int(9);
  auto r = field_sqrt(nine, rng);
  REQUIRE(r.has_value());
  CHECK((*r == F1->from_int(3) || *r == -F1->from_int(3)));
  CHECK(field_sqrt(F1->zero(), rng).value() == F1->zero());
}

TEST_CASE("group axioms on random points of the working curve") {
  auto C = big47();
  Rng rng(31337);
  for (int i = 0; i < 100; ++i) {
    const Point P = random_point(C, rng);
    const Point Q = random_point(C, rng);
    const Point R = random_point(C, rng);
    REQUIRE(C.contains(P));
    CHECK(point_add(P, Q, C) == point_add(Q, P, C));
    CHECK(point_add(point_add(P, Q, C), R, C) == point_add(P, point_add(Q, R, C), C));
    CHECK(point_add(P, point_neg(P, C), C).is_infinity());
  }
}

TEST_CASE("every rational point is killed by the group order") {
  auto C = big47();
  Rng rng(555);
  const u64 order = order_over_extension(48, 47, 6);
  for (int i = 0; i < 100; ++i) {
    const Point P = random_point(C, rng);
    CHECK(scalar_mul(static_cast<long long>(order), P, C).is_infinity());
  }
}

TEST_CASE("generating pair of the torsion subgroup") {
  auto C = big47();
  Rng rng(17);
  const u64 N = 103824;  // exponent of E(GF(47^6)) = Z_N + Z_N
  auto basis = sample_generating_pair(C, 103, N, rng);
  CHECK(basis.l == 103);
  CHECK_FALSE(basis.G.is_infinity());
  CHECK_FALSE(basis.H.is_infinity());
  CHECK(scalar_mul(103, basis.G, C).is_infinity());
  CHECK(scalar_mul(103, basis.H, C).is_infinity());
  CHECK(weil_pair(basis.G, basis.H, 103, C) != C.field->one());
  // ord exactly 103: 103 is prime and G != O.
  CHECK(scalar_mul(104, basis.G, C) == basis.G);

  CHECK_THROWS_AS(sample_generating_pair(C, 101, N, rng), Error);  // 101 does not divide N
}

TEST_CASE("generating pair on the toy torsion group") {
  auto C = toy11();
  Rng rng(40);
  auto basis = sample_generating_pair(C, 3, 12, rng);
  CHECK(scalar_mul(3, basis.G, C).is_infinity());
  CHECK(scalar_mul(3, basis.H, C).is_infinity());
  CHECK(weil_pair(basis.G, basis.H, 3, C) != C.field->one());
}

TEST_CASE("coordinate points cache their combination") {
  auto C = big47();
  Rng rng(91);
  auto basis = sample_generating_pair(C, 103, 103824, rng);
  for (int i = 0; i < 20; ++i) {
    Scalar r(rng.below(103), 103), s(rng.below(103), 103);
    auto cp = make_coord_point(r, s, basis, C);
    auto expect = point_add(scalar_mul(static_cast<long long>(r.v), basis.G, C),
                            scalar_mul(static_cast<long long>(s.v), basis.H, C), C);
    CHECK(cp.point == expect);
  }
  CHECK_THROWS_AS(make_coord_point(Scalar(1, 7), Scalar(1, 103), basis, C), Error);
}

TEST_CASE("point serialization round-trips") {
  auto C = big47();
  Rng rng(12);
  CHECK(point_to_string(Point::at_infinity()) == "inf");
  CHECK(point_from_string("inf", C.field).is_infinity());
  for (int i = 0; i < 20; ++i) {
    const Point P = random_point(C, rng);
    CHECK(point_from_string(point_to_string(P), C.field) == P);
  }
  CHECK_THROWS_AS(point_from_string("zz", C.field), Error);
  CHECK_THROWS_AS(point_from_string("0102", C.field), Error);
}
