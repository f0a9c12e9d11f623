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

#include "ecmss/curve.hpp"

#include "ecmss/pairing.hpp"

namespace ecmss {

using u64 = std::uint64_t;

Curve::Curve(FieldPtr f, ExtFieldElement a, ExtFieldElement b)
    : field(std::move(f)), A(std::move(a)), B(std::move(b)) {
  const auto four = field->from_int(4);
  const auto twenty_seven = field->from_int(27);
  const auto disc = four * A * A * A + twenty_seven * B * B;
  if (disc.is_zero()) fail(Errc::OffCurveInput, "singular curve: 4A^3 + 27B^2 = 0");
}

bool Curve::contains(const Point& P) const {
  if (P.infinity) return true;
  return P.y * P.y == P.x * P.x * P.x + A * P.x + B;
}

namespace {
void check_on_curve(const Point& P, const Curve& curve, const char* who) {
  if (!curve.contains(P)) fail(Errc::OffCurveInput, std::string(who) + " does not satisfy the curve equation");
}
}  // namespace

Point point_neg(const Point& P, const Curve& curve) {
  check_on_curve(P, curve, "point");
  if (P.infinity) return P;
  return Point::affine(P.x, -P.y);
}

Point point_add(const Point& P, const Point& Q, const Curve& curve) {
  check_on_curve(P, curve, "left operand");
  check_on_curve(Q, curve, "right operand");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  ExtFieldElement lambda;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return Point::at_infinity();  // covers the 2-torsion y = 0 case
    const auto three = curve.field->from_int(3);
    const auto two = curve.field->from_int(2);
    lambda = (three * P.x * P.x + curve.A) / (two * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  const auto x3 = lambda * lambda - P.x - Q.x;
  const auto y3 = lambda * (P.x - x3) - P.y;
  return Point::affine(x3, y3);
}

Point point_sub(const Point& P, const Point& Q, const Curve& curve) {
  return point_add(P, point_neg(Q, curve), curve);
}

Point scalar_mul(long long n, const Point& P, const Curve& curve) {
  check_on_curve(P, curve, "point");
  Point base = P;
  if (n < 0) {
    base = point_neg(base, curve);
    n = -n;
  }
  Point acc = Point::at_infinity();
  u64 e = static_cast<u64>(n);
  while (e) {
    if (e & 1) acc = point_add(acc, base, curve);
    e >>= 1;
    if (e) base = point_add(base, base, curve);
  }
  return acc;
}

std::uint64_t count_points_prime(u64 a, u64 b, u64 p) {
  a %= p;
  b %= p;
  u64 count = 1;  // infinity
  for (u64 x = 0; x < p; ++x) {
    u64 rhs = (mulmod_u64(mulmod_u64(x, x, p), x, p) + mulmod_u64(a, x, p) + b) % p;
    if (rhs == 0) {
      count += 1;
    } else if (powmod_u64(rhs, (p - 1) / 2, p) == 1) {
      count += 2;
    }
  }
  return count;
}

std::uint64_t order_over_extension(u64 count_base, u64 p, std::uint32_t r) {
  using i128 = __int128;
  i128 t_prev = 2;  // t_0
  i128 t_cur = static_cast<i128>(p) + 1 - static_cast<i128>(count_base);  // t_1
  for (std::uint32_t n = 2; n <= r; ++n) {
    i128 t_next = t_cur * (static_cast<i128>(p) + 1 - static_cast<i128>(count_base)) -
                  static_cast<i128>(p) * t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  i128 q = 1;
  for (std::uint32_t i = 0; i < r; ++i) q *= p;
  i128 order = q + 1 - (r == 0 ? 0 : t_cur);
  return static_cast<u64>(order);
}

std::optional<ExtFieldElement> field_sqrt(const ExtFieldElement& a, Rng& rng) {
  const auto& F = a.field();
  if (a.is_zero()) return F->zero();
  const u64 q = F->q();
  const auto one = F->one();
  if (a.pow((q - 1) / 2) != one) return std::nullopt;

  u64 m = q - 1;
  u64 s = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++s;
  }
  if (s == 1) {
    // q = 3 mod 4 shortcut: a^((q+1)/4)
    return a.pow((q + 1) / 4);
  }
  // Non-residue by sampling; half of all nonzero elements qualify.
  ExtFieldElement z;
  for (;;) {
    z = F->random_element(rng);
    if (z.is_zero()) continue;
    if (z.pow((q - 1) / 2) != one) break;
  }
  u64 M = s;
  auto c = z.pow(m);
  auto t = a.pow(m);
  auto R = a.pow((m + 1) / 2);
  while (t != one) {
    u64 i = 0;
    auto t2 = t;
    while (t2 != one) {
      t2 = t2 * t2;
      ++i;
      if (i == M) return std::nullopt;  // unreachable for verified residues
    }
    auto b = c;
    for (u64 j = 0; j + i + 1 < M; ++j) b = b * b;
    M = i;
    c = b * b;
    t = t * c;
    R = R * b;
  }
  return R;
}

Point random_point(const Curve& curve, Rng& rng) {
  const auto& F = curve.field;
  for (;;) {
    auto x = F->random_element(rng);
    auto rhs = x * x * x + curve.A * x + curve.B;
    auto root = field_sqrt(rhs, rng);
    if (!root) continue;
    auto y = *root;
    if (!y.is_zero() && rng.bit()) y = -y;
    return Point::affine(x, y);
  }
}

TorsionBasis sample_generating_pair(const Curve& curve, u64 l, u64 N, Rng& rng) {
  if (l == 0 || N % l != 0) fail(Errc::TorsionNotRational, "torsion size does not divide the group exponent");
  const u64 cofactor = N / l;
  const int budget = 256;

  auto sample_order_l = [&]() -> std::optional<Point> {
    for (int tries = 0; tries < budget; ++tries) {
      Point P = scalar_mul(static_cast<long long>(cofactor), random_point(curve, rng), curve);
      if (P.is_infinity()) continue;
      if (!scalar_mul(static_cast<long long>(l), P, curve).is_infinity())
        return std::nullopt;  // exponent assumption violated
      return P;
    }
    return std::nullopt;
  };

  for (int tries = 0; tries < budget; ++tries) {
    auto G = sample_order_l();
    if (!G) break;
    auto H = sample_order_l();
    if (!H) break;
    auto w = weil_pair(*G, *H, l, curve);
    if (w == curve.field->one()) continue;  // dependent pair, resample
    TorsionBasis basis;
    basis.G = *G;
    basis.H = *H;
    basis.l = l;
    return basis;
  }
  fail(Errc::TorsionNotRational, "could not certify an independent pair of order-l points");
}

CoordPoint make_coord_point(Scalar r, Scalar s, const TorsionBasis& basis, const Curve& curve) {
  if (r.l != basis.l || s.l != basis.l) fail(Errc::BasisMismatch, "coordinate modulus differs from the basis order");
  CoordPoint cp;
  cp.r = r;
  cp.s = s;
  cp.point = point_add(scalar_mul(static_cast<long long>(r.v), basis.G, curve),
                       scalar_mul(static_cast<long long>(s.v), basis.H, curve), curve);
  return cp;
}

std::string point_to_string(const Point& P) {
  if (P.infinity) return "inf";
  return P.x.to_hex() + ":" + P.y.to_hex();
}

Point point_from_string(const std::string& text, const FieldPtr& field) {
  if (text == "inf") return Point::at_infinity();
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(Errc::MalformedDocument, "point must be `inf` or `x:y`");
  auto x = field->parse_hex(text.substr(0, colon));
  auto y = field->parse_hex(text.substr(colon + 1));
  return Point::affine(std::move(x), std::move(y));
}

}  // namespace ecmss
