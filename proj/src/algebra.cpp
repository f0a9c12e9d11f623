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

#include "ecmss/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ecmss {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "not-prime";
    case Errc::ReducibleModulus: return "reducible-modulus";
    case Errc::DegreeMismatch: return "degree-mismatch";
    case Errc::DivisionByZero: return "division-by-zero";
    case Errc::DuplicateX: return "duplicate-x";
    case Errc::ZeroX: return "zero-x";
    case Errc::BadDims: return "bad-dims";
    case Errc::Singular: return "singular";
    case Errc::OutOfRange: return "out-of-range";
    case Errc::OffCurveInput: return "off-curve-input";
    case Errc::TorsionNotRational: return "torsion-not-rational";
    case Errc::BasisMismatch: return "basis-mismatch";
    case Errc::NotTorsion: return "not-torsion";
    case Errc::DegenerateEvaluation: return "degenerate-evaluation";
    case Errc::UnsupportedCurveForm: return "unsupported-curve-form";
    case Errc::BadDistortionUnit: return "bad-distortion-unit";
    case Errc::NonPrimitiveSelfValue: return "non-primitive-self-value";
    case Errc::DegenerateIndex: return "degenerate-index";
    case Errc::IdentityPoint: return "identity-point";
    case Errc::ThresholdTooSmall: return "threshold-too-small";
    case Errc::WrongShareCount: return "wrong-share-count";
    case Errc::TooManySecrets: return "too-many-secrets";
    case Errc::BadThreshold: return "bad-threshold";
    case Errc::UnknownParticipant: return "unknown-participant";
    case Errc::NotEnoughShares: return "not-enough-shares";
    case Errc::CheaterDetected: return "cheater-detected";
    case Errc::InconsistentShares: return "inconsistent-shares";
    case Errc::StateMismatch: return "state-mismatch";
    case Errc::MalformedDocument: return "malformed-document";
    case Errc::UnknownSchemeVersion: return "unknown-scheme-version";
    case Errc::WrongScheme: return "wrong-scheme";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// u64 modular helpers
// ---------------------------------------------------------------------------

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 base, u64 exp, u64 m) {
  u64 acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

u64 invmod_u64(u64 a, u64 m) {
  if (a % m == 0) fail(Errc::DivisionByZero, "inverse of zero");
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr != 0) {
    long long qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  if (r != 1) fail(Errc::DivisionByZero, "not invertible");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<u64>(t);
}

u64 fnv1a64(const std::string& bytes) {
  u64 h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for every 64-bit integer.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 prime) : p(prime) {
  if (p <= 3 || !is_prime_u64(p)) fail(Errc::NotPrime, "p must be a prime > 3, got " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over Z_p (dense u64 vectors, low-to-high), used for
// modulus selection and element arithmetic.
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<u64>(((u128)a[i] * b[j] + out[i + j]) % p);
    }
  }
  return out;
}

// Remainder of a by the monic polynomial mod.
Poly poly_rem(Poly a, const Poly& mod, u64 p) {
  const std::size_t deg = mod.size() - 1;
  trim(a);
  while (a.size() > deg) {
    u64 lead = a.back();
    std::size_t shift = a.size() - 1 - deg;
    if (lead != 0) {
      for (std::size_t i = 0; i < mod.size(); ++i) {
        u64 sub = mulmod_u64(lead, mod[i], p);
        u64& tgt = a[shift + i];
        tgt = (tgt + p - sub) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, u64 p) {
  return poly_rem(poly_mul(a, b, p), mod, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& mod, u64 p) {
  Poly acc{1};
  base = poly_rem(std::move(base), mod, p);
  while (e) {
    if (e & 1) acc = poly_mulmod(acc, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return acc;
}

// x^(p^k) mod f, by k successive frobenius powers.
Poly poly_frobenius(const Poly& mod, u64 p, std::uint32_t k) {
  Poly x{0, 1};
  Poly acc = poly_rem(x, mod, p);
  for (std::uint32_t i = 0; i < k; ++i) acc = poly_powmod(acc, p, mod, p);
  return acc;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // reduce a mod b after making b monic
    u64 lead_inv = invmod_u64(b.back(), p);
    Poly bm = b;
    for (auto& c : bm) c = mulmod_u64(c, lead_inv, p);
    Poly r = poly_rem(a, bm, p);
    a = std::move(b);
    b = std::move(r);
    trim(b);
  }
  return a;
}

// Rabin irreducibility test for a monic polynomial of degree r over Z_p.
bool is_irreducible(const Poly& f, u64 p) {
  const std::size_t r = f.size() - 1;
  if (r == 0) return false;
  if (r == 1) return true;
  // x^(p^r) == x (mod f)
  Poly xq = poly_frobenius(f, p, static_cast<std::uint32_t>(r));
  Poly x{0, 1};
  if (poly_rem(x, f, p) != xq) return false;
  // gcd(x^(p^(r/d)) - x, f) == 1 for every prime d | r
  std::size_t n = r;
  std::vector<std::size_t> prime_divs;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      prime_divs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) prime_divs.push_back(n);
  for (std::size_t d : prime_divs) {
    Poly xe = poly_frobenius(f, p, static_cast<std::uint32_t>(r / d));
    // xe - x
    Poly diff = xe;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    // A nonzero constant gcd means coprime; anything else is a factor.
    if (g.size() != 1) return false;
  }
  return true;
}

// Least monic irreducible of degree r: non-leading coefficients enumerated
// as base-p digits of an increasing counter, so low-degree coefficients vary
// fastest and the winner is lexicographically least read from the top
// coefficient down.
Poly least_irreducible(u64 p, std::uint32_t r) {
  if (r == 1) return Poly{0, 1};  // the x - 0 convention for degree 1
  Poly f(r + 1, 0);
  f[r] = 1;
  for (u64 v = 0;; ++v) {
    u64 t = v;
    for (std::uint32_t i = 0; i < r; ++i) {
      f[i] = t % p;
      t /= p;
    }
    if (t != 0) fail(Errc::ReducibleModulus, "no irreducible of requested degree found");
    if (f[0] == 0) continue;  // divisible by x
    if (is_irreducible(f, p)) return f;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtField
// ---------------------------------------------------------------------------

ExtField::ExtField(PrimeField base, std::uint32_t r, std::vector<u64> modulus)
    : base_(base), r_(r), mod_(std::move(modulus)) {
  u64 q = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (q > (1ull << 62) / base_.p) fail(Errc::OutOfRange, "p^r exceeds the 63-bit desk-scale limit");
    q *= base_.p;
  }
  q_ = q;
  hexw_ = 1;
  u64 cap = 16;
  while (cap < base_.p) {
    cap *= 16;
    ++hexw_;
  }
}

FieldPtr ext_field_new(u64 p, std::uint32_t r, const std::optional<std::vector<u64>>& modulus) {
  PrimeField base(p);
  if (r < 1) fail(Errc::DegreeMismatch, "extension degree must be >= 1");
  std::vector<u64> mod;
  if (modulus) {
    mod = *modulus;
    for (auto& c : mod) c %= p;
    if (mod.size() != static_cast<std::size_t>(r) + 1)
      fail(Errc::DegreeMismatch, "modulus must have degree exactly r");
    if (mod.back() != 1) fail(Errc::DegreeMismatch, "modulus must be monic");
    if (!is_irreducible(mod, p)) fail(Errc::ReducibleModulus, "modulus is reducible over Z_p");
  } else {
    mod = least_irreducible(p, r);
  }
  return FieldPtr(new ExtField(base, r, std::move(mod)));
}

ExtFieldElement ExtField::zero() const {
  return ExtFieldElement(shared_from_this(), std::vector<u64>(r_, 0));
}

ExtFieldElement ExtField::one() const { return from_int(1); }

ExtFieldElement ExtField::from_coeffs(std::vector<u64> coeffs) const {
  for (auto& c : coeffs) c %= base_.p;
  if (coeffs.size() > r_) {
    Poly red = poly_rem(std::move(coeffs), mod_, base_.p);
    coeffs = std::move(red);
  }
  coeffs.resize(r_, 0);
  return ExtFieldElement(shared_from_this(), std::move(coeffs));
}

ExtFieldElement ExtField::from_int(u64 v) const {
  std::vector<u64> c(r_, 0);
  c[0] = v % base_.p;
  return ExtFieldElement(shared_from_this(), std::move(c));
}

ExtFieldElement ExtField::from_base(u64 raw) const {
  if (raw >= q_) fail(Errc::OutOfRange, "value does not fit in the field");
  std::vector<u64> c(r_, 0);
  for (std::uint32_t i = 0; i < r_; ++i) {
    c[i] = raw % base_.p;
    raw /= base_.p;
  }
  return ExtFieldElement(shared_from_this(), std::move(c));
}

ExtFieldElement ExtField::random_element(Rng& rng) const {
  std::vector<u64> c(r_);
  for (auto& x : c) x = rng.below(base_.p);
  return ExtFieldElement(shared_from_this(), std::move(c));
}

ExtFieldElement ExtField::parse_hex(const std::string& hex) const {
  const std::size_t want = static_cast<std::size_t>(hexw_) * r_;
  if (hex.size() != want)
    fail(Errc::MalformedDocument, "element hex has length " + std::to_string(hex.size()) +
                                      ", expected " + std::to_string(want));
  std::vector<u64> c(r_, 0);
  for (std::uint32_t i = 0; i < r_; ++i) {
    u64 digit = 0;
    for (std::uint32_t j = 0; j < hexw_; ++j) {
      char ch = hex[static_cast<std::size_t>(i) * hexw_ + j];
      u64 nib;
      if (ch >= '0' && ch <= '9') nib = static_cast<u64>(ch - '0');
      else if (ch >= 'a' && ch <= 'f') nib = static_cast<u64>(ch - 'a' + 10);
      else fail(Errc::MalformedDocument, "bad hex character in element");
      digit = digit * 16 + nib;
    }
    if (digit >= base_.p) fail(Errc::MalformedDocument, "element digit out of range");
    c[i] = digit;
  }
  return ExtFieldElement(shared_from_this(), std::move(c));
}

bool ExtField::same(const ExtField& o) const {
  return base_.p == o.base_.p && r_ == o.r_ && mod_ == o.mod_;
}

// ---------------------------------------------------------------------------
// ExtFieldElement
// ---------------------------------------------------------------------------

ExtFieldElement::ExtFieldElement(FieldPtr field, std::vector<u64> coeffs)
    : f_(std::move(field)), c_(std::move(coeffs)) {
  assert(c_.size() == f_->r());
}

namespace {
void check_same_field(const ExtFieldElement& a, const ExtFieldElement& b) {
  if (a.field().get() != b.field().get() && !a.field()->same(*b.field()))
    fail(Errc::DegreeMismatch, "elements of different fields");
}
}  // namespace

bool ExtFieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

ExtFieldElement ExtFieldElement::operator+(const ExtFieldElement& o) const {
  check_same_field(*this, o);
  std::vector<u64> out(c_.size());
  const u64 p = f_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = (c_[i] + o.c_[i]) % p;
  return ExtFieldElement(f_, std::move(out));
}

ExtFieldElement ExtFieldElement::operator-(const ExtFieldElement& o) const {
  check_same_field(*this, o);
  std::vector<u64> out(c_.size());
  const u64 p = f_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = (c_[i] + p - o.c_[i]) % p;
  return ExtFieldElement(f_, std::move(out));
}

ExtFieldElement ExtFieldElement::operator-() const {
  std::vector<u64> out(c_.size());
  const u64 p = f_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = (p - c_[i]) % p;
  return ExtFieldElement(f_, std::move(out));
}

ExtFieldElement ExtFieldElement::operator*(const ExtFieldElement& o) const {
  check_same_field(*this, o);
  Poly prod = poly_mulmod(c_, o.c_, f_->modulus(), f_->p());
  prod.resize(f_->r(), 0);
  return ExtFieldElement(f_, std::move(prod));
}

ExtFieldElement ExtFieldElement::operator/(const ExtFieldElement& o) const { return *this * o.inv(); }

bool ExtFieldElement::operator==(const ExtFieldElement& o) const {
  check_same_field(*this, o);
  return c_ == o.c_;
}

ExtFieldElement ExtFieldElement::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of the zero element");
  // Extended Euclid in Z_p[x] against the field modulus.
  const u64 p = f_->p();
  Poly r0 = f_->modulus(), r1 = c_;
  trim(r1);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    // divide r0 by r1
    u64 lead_inv = invmod_u64(r1.back(), p);
    Poly q;  // quotient, built high-to-low
    Poly rem = r0;
    trim(rem);
    if (rem.size() >= r1.size()) {
      q.assign(rem.size() - r1.size() + 1, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        u64 coef = mulmod_u64(rem.back(), lead_inv, p);
        std::size_t shift = rem.size() - r1.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < r1.size(); ++i) {
          u64 sub = mulmod_u64(coef, r1[i], p);
          rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
        trim(rem);
      }
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    Poly qs = poly_mul(q, s1, p);
    Poly ns = s0;
    if (ns.size() < qs.size()) ns.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) ns[i] = (ns[i] + p - qs[i]) % p;
    trim(ns);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  // r0 is a nonzero constant gcd; scale s0 to make it 1.
  if (r0.size() != 1) fail(Errc::DivisionByZero, "element not invertible (modulus not irreducible?)");
  u64 scale = invmod_u64(r0[0], p);
  Poly out = s0;
  for (auto& x : out) x = mulmod_u64(x, scale, p);
  out = poly_rem(std::move(out), f_->modulus(), p);
  out.resize(f_->r(), 0);
  return ExtFieldElement(f_, std::move(out));
}

ExtFieldElement ExtFieldElement::pow(u64 e) const {
  ExtFieldElement acc = f_->one();
  ExtFieldElement base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

u64 ExtFieldElement::to_base() const {
  u64 out = 0;
  for (std::size_t i = c_.size(); i-- > 0;) out = out * f_->p() + c_[i];
  return out;
}

std::string ExtFieldElement::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const std::uint32_t w = f_->hex_digit_width();
  std::string out;
  out.reserve(c_.size() * w);
  for (u64 digit : c_) {
    char buf[16];
    for (std::uint32_t j = w; j-- > 0;) {
      buf[j] = digits[digit & 0xF];
      digit >>= 4;
    }
    out.append(buf, w);
  }
  return out;
}

ExtFieldElement fe_inv(const ExtFieldElement& a) { return a.inv(); }

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar::Scalar(u64 value, u64 modulus) : v(value % modulus), l(modulus) {}

Scalar Scalar::from_signed(long long value, u64 modulus) {
  long long m = static_cast<long long>(modulus);
  long long r = value % m;
  if (r < 0) r += m;
  return Scalar(static_cast<u64>(r), modulus);
}

namespace {
void check_same_l(Scalar a, Scalar b) {
  if (a.l != b.l) throw std::logic_error("scalars with different moduli");
}
}  // namespace

Scalar Scalar::operator+(Scalar o) const {
  check_same_l(*this, o);
  return Scalar((v + o.v) % l, l);
}

Scalar Scalar::operator-(Scalar o) const {
  check_same_l(*this, o);
  return Scalar((v + l - o.v) % l, l);
}

Scalar Scalar::operator*(Scalar o) const {
  check_same_l(*this, o);
  return Scalar(mulmod_u64(v, o.v, l), l);
}

Scalar Scalar::operator-() const { return Scalar((l - v) % l, l); }

Scalar Scalar::inv() const { return Scalar(invmod_u64(v, l), l); }

// ---------------------------------------------------------------------------
// PolyZl / MatZl
// ---------------------------------------------------------------------------

Scalar PolyZl::eval(Scalar x) const {
  if (coeffs.empty()) return Scalar(0, x.l);
  Scalar acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

bool PolyZl::operator==(const PolyZl& o) const {
  if (coeffs.size() != o.coeffs.size()) return false;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != o.coeffs[i]) return false;
  return true;
}

MatZl MatZl::identity(std::size_t n, u64 l) {
  MatZl m;
  m.rows = m.cols = n;
  m.entries.assign(n * n, Scalar(0, l));
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1, l);
  return m;
}

MatZl MatZl::mul(const MatZl& o) const {
  if (cols != o.rows || entries.empty() || o.entries.empty())
    fail(Errc::BadDims, "matrix product dimension mismatch");
  const u64 l = entries.front().l;
  MatZl out;
  out.rows = rows;
  out.cols = o.cols;
  out.entries.assign(rows * o.cols, Scalar(0, l));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Scalar a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols; ++j) out.at(i, j) = out.at(i, j) + a * o.at(k, j);
    }
  return out;
}

std::vector<Scalar> MatZl::mul_vec(const std::vector<Scalar>& v) const {
  if (cols != v.size() || entries.empty()) fail(Errc::BadDims, "matrix-vector dimension mismatch");
  const u64 l = entries.front().l;
  std::vector<Scalar> out(rows, Scalar(0, l));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i] = out[i] + at(i, j) * v[j];
  return out;
}

bool MatZl::operator==(const MatZl& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != o.entries[i]) return false;
  return true;
}

std::vector<Scalar> lagrange_zero(const std::vector<Scalar>& xs) {
  if (xs.empty()) fail(Errc::BadDims, "need at least one evaluation point");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) fail(Errc::ZeroX, "evaluation point x = 0");
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) fail(Errc::DuplicateX, "repeated evaluation point");
  }
  std::vector<Scalar> out;
  out.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Scalar num(1, xs[k].l), den(1, xs[k].l);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == k) continue;
      num = num * xs[j];
      den = den * (xs[j] - xs[k]);
    }
    out.push_back(num * den.inv());
  }
  return out;
}

MatZl vandermonde(u64 n, u64 t, u64 l) {
  if (t < 1 || t > n || n >= l) fail(Errc::BadDims, "need 1 <= t <= n < l");
  MatZl m;
  m.rows = n;
  m.cols = t;
  m.entries.reserve(n * t);
  for (u64 j = 1; j <= n; ++j) {
    Scalar pw(1, l);
    const Scalar base(j, l);
    for (u64 k = 0; k < t; ++k) {
      m.entries.push_back(pw);
      pw = pw * base;
    }
  }
  return m;
}

MatZl mat_inv(const MatZl& m) {
  if (m.rows != m.cols || m.rows == 0) fail(Errc::BadDims, "inverse of a non-square matrix");
  const std::size_t n = m.rows;
  const u64 l = m.entries.front().l;
  MatZl a = m;
  MatZl inv = MatZl::identity(n, l);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) fail(Errc::Singular, "matrix not invertible mod l");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Scalar scale = a.at(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) * scale;
      inv.at(col, j) = inv.at(col, j) * scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a.at(row, col).is_zero()) continue;
      const Scalar factor = a.at(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(row, j) = a.at(row, j) - factor * a.at(col, j);
        inv.at(row, j) = inv.at(row, j) - factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace ecmss
