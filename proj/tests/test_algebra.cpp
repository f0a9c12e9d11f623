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
#include "ecmss/algebra.hpp"

#include <cstdint>

using namespace ecmss;
using u64 = std::uint64_t;

TEST_CASE("u64 modular helpers") {
  CHECK(mulmod_u64(103823, 103823, 1000000007) == 10779215329ull % 1000000007);
  CHECK(powmod_u64(47, 6, 1000000000039ull) == 10779215329ull);
  CHECK(powmod_u64(5, 0, 7) == 1);
  CHECK(invmod_u64(2, 103) == 52);
  CHECK(mulmod_u64(invmod_u64(97, 103), 97, 103) == 1);
  CHECK_THROWS_AS(invmod_u64(0, 103), Error);
  CHECK_THROWS_AS(invmod_u64(6, 9), Error);  // gcd 3, not invertible
}

TEST_CASE("fnv1a64 reference vectors") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(47));
  CHECK(is_prime_u64(103));
  CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(103824));
  CHECK_FALSE(is_prime_u64(10779422976ull));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("PrimeField rejects small or composite moduli") {
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK_THROWS_AS(PrimeField(3), Error);
  CHECK_THROWS_AS(PrimeField(91), Error);
  CHECK(PrimeField(47).p == 47);
}

TEST_CASE("automatic modulus selection is deterministic and minimal") {
  // Frozen: first monic irreducible for each (p, r) under base-p digit order.
  auto f1 = ext_field_new(11, 2);
  CHECK(f1->modulus() == std::vector<u64>{1, 0, 1});  // x^2 + 1
  auto f2 = ext_field_new(47, 6);
  CHECK(f2->modulus() == std::vector<u64>{1, 1, 0, 0, 0, 0, 1});  // x^6 + x + 1
  auto f3 = ext_field_new(47, 2);
  CHECK(f3->modulus() == std::vector<u64>{1, 0, 1});
  auto f4 = ext_field_new(13, 2);
  CHECK(f4->modulus() == std::vector<u64>{2, 0, 1});  // x^2 + 1 splits mod 13

  // Same parameters give the same field object content.
  auto f5 = ext_field_new(47, 6);
  CHECK(f2->same(*f5));
}

TEST_CASE("field construction contract") {
  CHECK(ext_field_new(47, 6)->q() == 10779215329ull);
  CHECK(ext_field_new(11, 2)->q() == 121);
  CHECK(ext_field_new(47, 1)->q() == 47);
  CHECK(ext_field_new(47, 6)->hex_digit_width() == 2);
  CHECK(ext_field_new(11, 2)->hex_digit_width() == 1);

  // Explicit modulus validation.
  CHECK_THROWS_AS(ext_field_new(13, 2, std::vector<u64>{1, 0, 1}), Error);  // reducible
  CHECK_THROWS_AS(ext_field_new(11, 2, std::vector<u64>{1, 0, 0, 1}), Error);  // wrong degree
  CHECK_THROWS_AS(ext_field_new(11, 2, std::vector<u64>{1, 0, 2}), Error);  // not monic
  CHECK_THROWS_AS(ext_field_new(12, 2), Error);  // composite p

  // Oversized towers are refused rather than overflowing.
  CHECK_THROWS_AS(ext_field_new(2305843009213693951ull, 2), Error);
}

TEST_CASE("field axioms on random samples") {
  auto F = ext_field_new(47, 6);
  Rng rng(0xA11CE5ull);
  for (int i = 0; i < 200; ++i) {
    auto a = F->random_element(rng);
    auto b = F->random_element(rng);
    auto c = F->random_element(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == F->zero());
    CHECK(a - b == a + (-b));
    if (!a.is_zero()) {
      CHECK(a * a.inv() == F->one());
      CHECK(fe_inv(a) == a.inv());
      CHECK(a.pow(F->q() - 1) == F->one());  // Fermat in GF(q)
    }
  }
  CHECK_THROWS_AS(F->zero().inv(), Error);
}

TEST_CASE("element encode and decode") {
  auto F = ext_field_new(47, 6);
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    u64 raw = rng.below(F->q());
    auto e = F->from_base(raw);
    CHECK(e.to_base() == raw);
    CHECK(F->parse_hex(e.to_hex()) == e);
  }
  CHECK(F->from_base(0) == F->zero());
  CHECK(F->from_base(1) == F->one());
  CHECK_THROWS_AS(F->from_base(F->q()), Error);

  // Digits are emitted low-to-high, fixed width 2 for p = 47.
  auto e = F->from_coeffs({1, 2, 0, 0, 0, 46});
  CHECK(e.to_hex() == "01020000002e");
  CHECK(F->parse_hex("01020000002e") == e);
  CHECK_THROWS_AS(F->parse_hex("010200"), Error);          // wrong length
  CHECK_THROWS_AS(F->parse_hex("010200000-2e"), Error);    // bad character
  CHECK_THROWS_AS(F->parse_hex("ff020000002e"), Error);    // digit >= p
}

TEST_CASE("from_coeffs reduces long and unreduced input") {
  auto F = ext_field_new(11, 2);  // modulus x^2 + 1
  // x^2 reduces to -1 = 10.
  CHECK(F->from_coeffs({0, 0, 1}) == F->from_coeffs({10, 0}));
  CHECK(F->from_coeffs({22, 13}) == F->from_coeffs({0, 2}));
}

TEST_CASE("scalar ring") {
  Scalar a(100, 103), b(5, 103);
  CHECK((a + b).v == 2);
  CHECK((a - b).v == 95);
  CHECK((a * b).v == (500 % 103));
  CHECK((-b).v == 98);
  CHECK(Scalar(1, 103).inv().v == 1);
  CHECK((b * b.inv()).v == 1);
  CHECK_THROWS_AS(Scalar(0, 103).inv(), Error);

  CHECK(Scalar::from_signed(-300, 103).v == 9);
  CHECK(Scalar::from_signed(-516, 103).v == 102);
  CHECK(Scalar::from_signed(324, 103).v == 15);
  CHECK(Scalar::from_signed(0, 103).v == 0);
}

TEST_CASE("polynomial evaluation") {
  PolyZl f{{Scalar(2, 103), Scalar(3, 103), Scalar(5, 103)}};
  CHECK(f.eval(Scalar(0, 103)).v == 2);
  CHECK(f.eval(Scalar(4, 103)).v == 94);
  CHECK(f.slots() == 3);
  // The slot count is part of the value even with a zero lead.
  PolyZl g{{Scalar(2, 103), Scalar(3, 103), Scalar(0, 103)}};
  CHECK(g.slots() == 3);
  CHECK(f != g);
}

TEST_CASE("lagrange coefficients at zero") {
  // Frozen oracle values.
  auto c2 = lagrange_zero({Scalar(1, 103), Scalar(2, 103)});
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].v == 2);
  CHECK(c2[1].v == 102);

  auto c3 = lagrange_zero({Scalar(1, 103), Scalar(2, 103), Scalar(3, 103)});
  REQUIRE(c3.size() == 3);
  CHECK(c3[0].v == 3);
  CHECK(c3[1].v == 100);
  CHECK(c3[2].v == 1);

  CHECK_THROWS_AS(lagrange_zero({Scalar(1, 103), Scalar(1, 103)}), Error);
  CHECK_THROWS_AS(lagrange_zero({Scalar(0, 103), Scalar(1, 103)}), Error);

  // Property: reproduces g(0) for random polynomials at random points.
  Rng rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    PolyZl g;
    for (int k = 0; k < 4; ++k) g.coeffs.push_back(Scalar(rng.below(103), 103));
    std::vector<Scalar> xs;
    while (xs.size() < 4) {
      Scalar x(rng.nonzero_below(103), 103);
      bool dup = false;
      for (auto& e : xs) dup = dup || e == x;
      if (!dup) xs.push_back(x);
    }
    auto lam = lagrange_zero(xs);
    Scalar acc(0, 103);
    for (std::size_t k = 0; k < xs.size(); ++k) acc = acc + lam[k] * g.eval(xs[k]);
    CHECK(acc == g.coeffs[0]);
  }
}

TEST_CASE("vandermonde and inverse") {
  auto V = vandermonde(3, 2, 103);
  REQUIRE(V.rows == 3);
  REQUIRE(V.cols == 2);
  CHECK(V.at(0, 0).v == 1);
  CHECK(V.at(0, 1).v == 1);
  CHECK(V.at(1, 0).v == 1);
  CHECK(V.at(1, 1).v == 2);
  CHECK(V.at(2, 0).v == 1);
  CHECK(V.at(2, 1).v == 3);
  CHECK_THROWS_AS(vandermonde(3, 0, 103), Error);
  CHECK_THROWS_AS(vandermonde(2, 3, 103), Error);
  CHECK_THROWS_AS(vandermonde(103, 2, 103), Error);

  MatZl M;
  M.rows = M.cols = 2;
  M.entries = {Scalar(1, 103), Scalar(1, 103), Scalar(1, 103), Scalar(2, 103)};
  auto Minv = mat_inv(M);
  CHECK(Minv.at(0, 0).v == 2);
  CHECK(Minv.at(0, 1).v == 102);
  CHECK(Minv.at(1, 0).v == 102);
  CHECK(Minv.at(1, 1).v == 1);
  CHECK(M.mul(Minv) == MatZl::identity(2, 103));
  CHECK(Minv.mul(M) == MatZl::identity(2, 103));

  MatZl S;  // singular: rank 1
  S.rows = S.cols = 2;
  S.entries = {Scalar(1, 103), Scalar(2, 103), Scalar(2, 103), Scalar(4, 103)};
  CHECK_THROWS_AS(mat_inv(S), Error);

  // Random square Vandermonde blocks invert cleanly.
  Rng rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    auto W = vandermonde(4, 4, 103);
    auto Winv = mat_inv(W);
    CHECK(W.mul(Winv) == MatZl::identity(4, 103));
  }

  auto v = M.mul_vec({Scalar(10, 103), Scalar(20, 103)});
  REQUIRE(v.size() == 2);
  CHECK(v[0].v == 30);
  CHECK(v[1].v == 50);
}

TEST_CASE("rng determinism and range") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    u64 v = c.below(103);
    CHECK(v < 103);
    u64 nz = c.nonzero_below(103);
    CHECK(nz >= 1);
    CHECK(nz < 103);
  }
}
