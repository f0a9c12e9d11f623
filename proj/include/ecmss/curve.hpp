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
#include <optional>
#include <string>

#include "ecmss/algebra.hpp"

namespace ecmss {

/// Affine point or the point at infinity. Coordinates are meaningful only
/// when infinity is false.
struct Point {
  bool infinity = true;
  ExtFieldElement x;
  ExtFieldElement y;

  static Point at_infinity() { return Point{}; }
  static Point affine(ExtFieldElement px, ExtFieldElement py) {
    Point p;
    p.infinity = false;
    p.x = std::move(px);
    p.y = std::move(py);
    return p;
  }

  bool is_infinity() const { return infinity; }

  bool operator==(const Point& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

/// y^2 = x^3 + Ax + B over the field's GF(p^r). Construction checks the
/// discriminant 4A^3 + 27B^2 is nonzero.
struct Curve {
  FieldPtr field;
  ExtFieldElement A;
  ExtFieldElement B;

  Curve(FieldPtr f, ExtFieldElement a, ExtFieldElement b);

  bool contains(const Point& P) const;
};

/// Independent pair generating E[l]; independence is certified by a
/// nontrivial Weil pairing value at sampling time.
struct TorsionBasis {
  Point G;
  Point H;
  std::uint64_t l = 0;
};

/// Point with its known coordinates against a TorsionBasis:
/// point = r*G + s*H. Built through make_coord_point so the cache always
/// matches the coordinates.
struct CoordPoint {
  Scalar r;
  Scalar s;
  Point point;
};

Point point_neg(const Point& P, const Curve& curve);
Point point_add(const Point& P, const Point& Q, const Curve& curve);
Point point_sub(const Point& P, const Point& Q, const Curve& curve);
/// n*P by double-and-add; negative n negates the point first.
Point scalar_mul(long long n, const Point& P, const Curve& curve);

/// Brute-force #E(GF(p)) for y^2 = x^3 + ax + b with a, b, p machine-sized.
std::uint64_t count_points_prime(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// #E(GF(p^r)) from #E(GF(p)) by the Frobenius trace recursion
/// t_1 = p + 1 - count_base, t_n = t_1 t_{n-1} - p t_{n-2}.
std::uint64_t order_over_extension(std::uint64_t count_base, std::uint64_t p, std::uint32_t r);

/// Square root in GF(q) by Tonelli-Shanks, generalized to extension fields.
/// Returns nullopt for non-residues; the rng samples the needed non-residue.
std::optional<ExtFieldElement> field_sqrt(const ExtFieldElement& a, Rng& rng);

/// Uniformly random affine point: random x until x^3 + Ax + B is a square,
/// root sign chosen by one rng bit.
Point random_point(const Curve& curve, Rng& rng);

/// Basis of E[l] when the rational group has exponent N with l | N:
/// random points scaled by N/l, kept when they reach exact order l and the
/// Weil pairing certifies independence. TorsionNotRational when l does not
/// divide N or certification never succeeds within the retry budget.
TorsionBasis sample_generating_pair(const Curve& curve, std::uint64_t l, std::uint64_t N, Rng& rng);

/// r*G + s*H with the coordinates retained.
CoordPoint make_coord_point(Scalar r, Scalar s, const TorsionBasis& basis, const Curve& curve);

/// `inf`, or `x:y` with both coordinates in the field hex encoding.
std::string point_to_string(const Point& P);
Point point_from_string(const std::string& text, const FieldPtr& field);

}  // namespace ecmss
