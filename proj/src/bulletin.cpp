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

#include "ecmss/bulletin.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ecmss {

using u64 = std::uint64_t;

namespace {

std::string dec(u64 v) { return std::to_string(v); }

// Strict canonical decimal: digits only, no sign, no redundant leading zero.
u64 parse_u64(const std::string& s, const std::string& where) {
  if (s.empty()) fail(Errc::MalformedDocument, where + ": empty integer");
  for (char ch : s)
    if (ch < '0' || ch > '9') fail(Errc::MalformedDocument, where + ": `" + s + "` is not a decimal integer");
  if (s.size() > 1 && s.front() == '0') fail(Errc::MalformedDocument, where + ": leading zero in `" + s + "`");
  u64 v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    fail(Errc::MalformedDocument, where + ": integer `" + s + "` out of range");
  return v;
}

bool is_deal_id(const std::string& s) {
  if (s.size() != 16) return false;
  for (char ch : s)
    if (!((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f'))) return false;
  return true;
}

// The lines fixed at deal time, in canonical order; both the serializer
// and the deal-id hash are built from this list.
std::vector<std::string> param_lines(const Bulletin& b) {
  const SystemParams& params = b.params;
  const FieldPtr& field = params.curve.field;
  std::vector<std::string> lines;
  auto put = [&](const char* key, const std::string& value) {
    lines.push_back(std::string(key) + " = " + value);
  };
  put("p", dec(field->p()));
  put("r", dec(field->r()));
  std::string mods;
  for (std::size_t i = 0; i < field->modulus().size(); ++i) {
    if (i) mods += ',';
    mods += dec(field->modulus()[i]);
  }
  put("modulus", mods);
  put("A", params.curve.A.to_hex());
  put("B", params.curve.B.to_hex());
  put("q", dec(params.q));
  put("l", dec(params.l));
  put("k", dec(params.k));
  put("t", dec(b.threshold));
  put("n", dec(b.V.size()));
  put("G", point_to_string(params.basis.G));
  put("H", point_to_string(params.basis.H));
  put("alpha", dec(params.ctx.alpha.v));
  put("beta", dec(params.ctx.beta.v));
  put("W", point_to_string(params.ctx.W));
  put("u", params.u.to_hex());
  put("c", dec(b.qc.v));
  put("d", dec(b.qd.v));
  put("Q", point_to_string(b.Qpt));
  return lines;
}

// Serializer-side invariants; a bulletin violating them has no canonical
// form, so refusing beats emitting a document deserialize would reject.
void check_serializable(const BulletinDocument& doc) {
  const Bulletin& b = doc.bulletin;
  if (!is_deal_id(doc.deal_id))
    fail(Errc::MalformedDocument, "deal id must be 16 lowercase hex digits");
  if (b.V.size() != b.x_assign.size())
    fail(Errc::MalformedDocument, "one verification point per assigned x is required");
  if (b.R.empty()) fail(Errc::MalformedDocument, "a deal publishes at least one recovery code");
  u64 prev = 0;
  for (const Scalar& x : b.x_assign) {
    if (x.v == 0 || x.v <= prev)
      fail(Errc::MalformedDocument, "participant x values must be strictly increasing and nonzero");
    prev = x.v;
  }
  if (doc.liu.has_value()) {
    if (doc.liu->entries.empty() || doc.liu->entries.size() > doc.liu->t)
      fail(Errc::MalformedDocument, "baseline appendix must carry between 1 and t secrets");
  }
}

// ---------------------------------------------------------------------------
// Strict line cursor
// ---------------------------------------------------------------------------

struct Cursor {
  std::vector<std::string> lines;
  std::size_t i = 0;

  explicit Cursor(const std::string& text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      if (nl == std::string::npos) {
        if (start < text.size()) lines.push_back(text.substr(start));
        break;
      }
      lines.push_back(text.substr(start, nl - start));
      start = nl + 1;
    }
  }

  bool done() const { return i >= lines.size(); }

  std::string where() const { return "line " + dec(i + 1); }
};

// Next `key = value` pair; single separator, nonempty halves, no spaces
// inside either half.
std::pair<std::string, std::string> next_kv(Cursor& cur) {
  if (cur.done())
    fail(Errc::MalformedDocument, cur.where() + ": unexpected end of document");
  const std::string& line = cur.lines[cur.i];
  std::size_t sep = line.find(" = ");
  if (sep == std::string::npos || sep == 0 || sep + 3 >= line.size())
    fail(Errc::MalformedDocument, cur.where() + ": expected `key = value`");
  std::string key = line.substr(0, sep);
  std::string value = line.substr(sep + 3);
  if (key.find(' ') != std::string::npos || value.find(' ') != std::string::npos)
    fail(Errc::MalformedDocument, cur.where() + ": stray spaces");
  ++cur.i;
  return {std::move(key), std::move(value)};
}

std::string expect(Cursor& cur, const char* key) {
  std::string where = cur.where();
  auto [k, v] = next_kv(cur);
  if (k != key)
    fail(Errc::MalformedDocument, where + ": expected key `" + key + "`, found `" + k + "`");
  return v;
}

ExtFieldElement parse_elem(const FieldPtr& field, const std::string& s, const std::string& where) {
  try {
    return field->parse_hex(s);
  } catch (const Error& e) {
    fail(Errc::MalformedDocument, where + ": " + e.what());
  }
}

Point parse_point(const std::string& s, const Curve& curve, bool allow_inf,
                  const std::string& where) {
  Point P;
  try {
    P = point_from_string(s, curve.field);
  } catch (const Error& e) {
    fail(Errc::MalformedDocument, where + ": " + e.what());
  }
  if (P.is_infinity() && !allow_inf)
    fail(Errc::MalformedDocument, where + ": the point at infinity is not allowed here");
  if (!curve.contains(P))
    fail(Errc::MalformedDocument, where + ": point does not satisfy the curve equation");
  return P;
}

Scalar parse_scalar(const std::string& s, u64 l, const std::string& where) {
  u64 v = parse_u64(s, where);
  if (v >= l) fail(Errc::MalformedDocument, where + ": scalar must stay below l");
  return Scalar(v, l);
}

std::string format_deal_id(u64 h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf, 16);
}

// Splits a single `k1=v1 k2=v2 ...` record line and returns the values for
// the expected keys, in order.
std::vector<std::string> record_fields(const std::string& text, const std::vector<const char*>& keys,
                                       const char* what) {
  std::string line = text;
  if (!line.empty() && line.back() == '\n') line.pop_back();
  if (line.empty() || line.find('\n') != std::string::npos)
    fail(Errc::MalformedDocument, std::string(what) + " must be a single line");
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t sp = line.find(' ', start);
    if (sp == std::string::npos) {
      tokens.push_back(line.substr(start));
      break;
    }
    tokens.push_back(line.substr(start, sp - start));
    start = sp + 1;
  }
  if (tokens.size() != keys.size())
    fail(Errc::MalformedDocument, std::string(what) + ": expected " + dec(keys.size()) + " fields");
  std::vector<std::string> values;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::string prefix = std::string(keys[i]) + "=";
    if (tokens[i].rfind(prefix, 0) != 0 || tokens[i].size() <= prefix.size())
      fail(Errc::MalformedDocument,
           std::string(what) + ": field " + dec(i + 1) + " must be `" + keys[i] + "=...`");
    values.push_back(tokens[i].substr(prefix.size()));
  }
  return values;
}

}  // namespace

std::string compute_deal_id(const Bulletin& bulletin) {
  std::string bytes;
  for (const std::string& line : param_lines(bulletin)) {
    bytes += line;
    bytes += '\n';
  }
  return format_deal_id(fnv1a64(bytes));
}

BulletinDocument make_document(const Bulletin& bulletin) {
  return BulletinDocument{1, compute_deal_id(bulletin), bulletin, std::nullopt};
}

std::string serialize(const BulletinDocument& doc) {
  check_serializable(doc);
  const Bulletin& b = doc.bulletin;
  std::string out;
  out += "scheme = ecmss\n";
  out += "version = " + dec(doc.version) + "\n";
  out += "deal = " + doc.deal_id + "\n";
  for (const std::string& line : param_lines(b)) {
    out += line;
    out += '\n';
  }
  out += "V0 = " + point_to_string(b.V0) + "\n";
  for (std::size_t i = 0; i < b.V.size(); ++i)
    out += "V." + dec(b.x_assign[i].v) + " = " + point_to_string(b.V[i]) + "\n";
  out += "m = " + dec(b.R.size()) + "\n";
  for (std::size_t i = 0; i < b.R.size(); ++i)
    out += "R." + dec(i + 1) + " = " + b.R[i].to_hex() + "\n";
  if (doc.liu.has_value()) {
    out += "scheme = liu\n";
    out += "liu.t = " + dec(doc.liu->t) + "\n";
    out += "liu.m = " + dec(doc.liu->entries.size()) + "\n";
    for (std::size_t i = 0; i < doc.liu->entries.size(); ++i) {
      const LiuSecretEntry& e = doc.liu->entries[i];
      out += "liu.c." + dec(i + 1) + " = " + dec(e.c.v) + "\n";
      out += "liu.d." + dec(i + 1) + " = " + dec(e.d.v) + "\n";
      out += "liu.R." + dec(i + 1) + " = " + point_to_string(e.R) + "\n";
    }
  }
  return out;
}

BulletinDocument deserialize(const std::string& text) {
  if (text.empty()) fail(Errc::MalformedDocument, "empty document");
  Cursor cur(text);

  if (expect(cur, "scheme") != "ecmss")
    fail(Errc::MalformedDocument, "line 1: unknown scheme id");
  const std::string version_s = expect(cur, "version");
  const u64 version = parse_u64(version_s, "version");
  if (version != 1)
    fail(Errc::UnknownSchemeVersion, "only version 1 is understood, found " + version_s);
  const std::string deal = expect(cur, "deal");
  if (!is_deal_id(deal))
    fail(Errc::MalformedDocument, "deal id must be 16 lowercase hex digits");

  const u64 p = parse_u64(expect(cur, "p"), "p");
  const u64 r = parse_u64(expect(cur, "r"), "r");
  if (r == 0 || r > 64) fail(Errc::MalformedDocument, "r out of range");
  const std::string mods = expect(cur, "modulus");
  std::vector<u64> mod;
  std::size_t start = 0;
  while (start <= mods.size()) {
    std::size_t comma = mods.find(',', start);
    std::string piece =
        comma == std::string::npos ? mods.substr(start) : mods.substr(start, comma - start);
    mod.push_back(parse_u64(piece, "modulus"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (mod.size() != r + 1)
    fail(Errc::MalformedDocument, "modulus must list r+1 coefficients");
  for (u64 coeff : mod)
    if (coeff >= p) fail(Errc::MalformedDocument, "modulus coefficients must be reduced mod p");
  FieldPtr field;
  try {
    field = ext_field_new(p, static_cast<std::uint32_t>(r), mod);
  } catch (const Error& e) {
    fail(Errc::MalformedDocument, std::string("field parameters rejected: ") + e.what());
  }

  const ExtFieldElement A = parse_elem(field, expect(cur, "A"), "A");
  const ExtFieldElement B = parse_elem(field, expect(cur, "B"), "B");
  std::optional<Curve> curve_opt;
  try {
    curve_opt.emplace(field, A, B);
  } catch (const Error& e) {
    fail(Errc::MalformedDocument, std::string("curve rejected: ") + e.what());
  }
  const Curve& curve = *curve_opt;

  const u64 q = parse_u64(expect(cur, "q"), "q");
  if (q != field->q()) fail(Errc::MalformedDocument, "q disagrees with p^r");
  const u64 l = parse_u64(expect(cur, "l"), "l");
  if (!is_prime_u64(l)) fail(Errc::MalformedDocument, "l must be prime");
  const u64 k = parse_u64(expect(cur, "k"), "k");
  if (k == 0 || k > 0xffffffffull) fail(Errc::MalformedDocument, "k out of range");
  const u64 t = parse_u64(expect(cur, "t"), "t");
  const u64 n = parse_u64(expect(cur, "n"), "n");
  if (t < 2) fail(Errc::MalformedDocument, "threshold must be at least 2");
  if (n < t || n >= l) fail(Errc::MalformedDocument, "participant count out of range");

  const Point G = parse_point(expect(cur, "G"), curve, false, "G");
  const Point H = parse_point(expect(cur, "H"), curve, false, "H");
  const long long ll = static_cast<long long>(l);
  if (!scalar_mul(ll, G, curve).is_infinity() || !scalar_mul(ll, H, curve).is_infinity())
    fail(Errc::MalformedDocument, "G and H must have order l");
  try {
    if (weil_pair(G, H, l, curve) == field->one())
      fail(Errc::MalformedDocument, "G and H are dependent");
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedDocument) throw;
    fail(Errc::MalformedDocument, std::string("basis independence check failed: ") + e.what());
  }
  const TorsionBasis basis{G, H, l};

  const Scalar alpha = parse_scalar(expect(cur, "alpha"), l, "alpha");
  const Scalar beta = parse_scalar(expect(cur, "beta"), l, "beta");
  if (alpha.is_zero() && beta.is_zero())
    fail(Errc::MalformedDocument, "alpha and beta cannot both be zero");
  const Point W = parse_point(expect(cur, "W"), curve, true, "W");
  SelfPairingCtx ctx = make_self_pairing_ctx(basis, alpha, beta, curve);
  if (W != ctx.W) fail(Errc::MalformedDocument, "W disagrees with alpha G + beta H");

  const ExtFieldElement u = parse_elem(field, expect(cur, "u"), "u");
  if (u * u != -field->one())
    fail(Errc::MalformedDocument, "u is not a square root of -1");

  const Scalar c = parse_scalar(expect(cur, "c"), l, "c");
  const Scalar d = parse_scalar(expect(cur, "d"), l, "d");
  if (c.is_zero() || d.is_zero())
    fail(Errc::MalformedDocument, "challenge scalars must be nonzero");
  const Point Qpt = parse_point(expect(cur, "Q"), curve, true, "Q");
  const Point qcombo = point_add(scalar_mul(static_cast<long long>(c.v), G, curve),
                                 scalar_mul(static_cast<long long>(d.v), H, curve), curve);
  if (Qpt != qcombo) fail(Errc::MalformedDocument, "Q disagrees with c G + d H");

  const Point V0 = parse_point(expect(cur, "V0"), curve, true, "V0");

  std::vector<Point> V;
  std::vector<Scalar> xs;
  u64 prev_x = 0;
  for (u64 i = 0; i < n; ++i) {
    std::string where = cur.where();
    auto [key, value] = next_kv(cur);
    if (key.rfind("V.", 0) != 0)
      fail(Errc::MalformedDocument, where + ": expected a verification point, found `" + key + "`");
    const u64 x = parse_u64(key.substr(2), where + ": verification key");
    if (x == 0 || x >= l)
      fail(Errc::MalformedDocument, where + ": participant x out of range");
    if (x <= prev_x)
      fail(Errc::MalformedDocument, where + ": participant x values must increase");
    prev_x = x;
    xs.emplace_back(x, l);
    V.push_back(parse_point(value, curve, true, where));
  }

  const u64 m = parse_u64(expect(cur, "m"), "m");
  if (m == 0) fail(Errc::MalformedDocument, "a deal publishes at least one recovery code");
  if (m >= l) fail(Errc::MalformedDocument, "secret count must stay below the torsion order");
  std::vector<ExtFieldElement> R;
  for (u64 i = 1; i <= m; ++i) {
    std::string where = cur.where();
    std::string key = "R." + dec(i);
    std::string value = expect(cur, key.c_str());
    R.push_back(parse_elem(field, value, where));
  }

  std::optional<LiuBlock> liu;
  if (!cur.done()) {
    if (expect(cur, "scheme") != "liu")
      fail(Errc::MalformedDocument, "unknown trailing scheme id");
    LiuBlock block;
    block.t = parse_u64(expect(cur, "liu.t"), "liu.t");
    if (block.t == 0 || block.t >= l)
      fail(Errc::MalformedDocument, "liu.t out of range");
    const u64 lm = parse_u64(expect(cur, "liu.m"), "liu.m");
    if (lm == 0 || lm > block.t)
      fail(Errc::MalformedDocument, "the baseline scheme publishes between 1 and t secrets");
    for (u64 i = 1; i <= lm; ++i) {
      std::string where = cur.where();
      LiuSecretEntry entry{Scalar(0, l), Scalar(0, l), Point::at_infinity()};
      entry.c = parse_scalar(expect(cur, ("liu.c." + dec(i)).c_str()), l, where);
      entry.d = parse_scalar(expect(cur, ("liu.d." + dec(i)).c_str()), l, where);
      entry.R = parse_point(expect(cur, ("liu.R." + dec(i)).c_str()), curve, true, where);
      block.entries.push_back(std::move(entry));
    }
    liu = std::move(block);
  }
  if (!cur.done())
    fail(Errc::MalformedDocument, cur.where() + ": trailing content after the document");

  SystemParams params{curve, q, l, static_cast<std::uint32_t>(k), basis, ctx, u};
  Bulletin bulletin{params, t, c, d, Qpt, V0, std::move(V), std::move(R), std::move(xs)};
  BulletinDocument doc{static_cast<std::uint32_t>(version), deal, std::move(bulletin),
                       std::move(liu)};

  if (compute_deal_id(doc.bulletin) != deal)
    fail(Errc::MalformedDocument, "deal id disagrees with the parameter hash");
  // Byte-level canonicality: anything the field checks above let through
  // (spacing, case, ordering) must still re-serialize to the exact input.
  if (serialize(doc) != text)
    fail(Errc::MalformedDocument, "document is not in canonical form");
  return doc;
}

std::uint64_t param_count(const BulletinDocument& doc) {
  if (doc.liu.has_value())
    fail(Errc::WrongScheme, "parameter accounting covers threshold-scheme bulletins only");
  return 7 + doc.bulletin.V.size() + doc.bulletin.R.size();
}

std::string serialize_share(const ShareRecord& rec) {
  if (!is_deal_id(rec.deal_id))
    fail(Errc::MalformedDocument, "deal id must be 16 lowercase hex digits");
  const Scalar& x = rec.share.x;
  const Scalar& s = rec.share.s;
  if (x.l != s.l || x.v == 0)
    fail(Errc::MalformedDocument, "share must carry a nonzero x and one modulus");
  return "x=" + dec(x.v) + " s=" + dec(s.v) + " l=" + dec(x.l) + " deal=" + rec.deal_id + "\n";
}

ShareRecord parse_share(const std::string& text) {
  auto v = record_fields(text, {"x", "s", "l", "deal"}, "share file");
  const u64 l = parse_u64(v[2], "share l");
  if (l < 2) fail(Errc::MalformedDocument, "share modulus out of range");
  const u64 x = parse_u64(v[0], "share x");
  const u64 s = parse_u64(v[1], "share s");
  if (x == 0 || x >= l) fail(Errc::MalformedDocument, "share x out of range");
  if (s >= l) fail(Errc::MalformedDocument, "share value out of range");
  if (!is_deal_id(v[3])) fail(Errc::MalformedDocument, "share deal id must be 16 hex digits");
  return ShareRecord{v[3], ShamirShare{Scalar(x, l), Scalar(s, l)}};
}

std::string serialize_liu_share(const LiuShareRecord& rec) {
  if (!is_deal_id(rec.deal_id))
    fail(Errc::MalformedDocument, "deal id must be 16 lowercase hex digits");
  const LiuShare& sh = rec.share;
  if (sh.j == 0 || sh.a.l != sh.b.l)
    fail(Errc::MalformedDocument, "share must carry a nonzero index and one modulus");
  return "x=" + dec(sh.j) + " a=" + dec(sh.a.v) + " b=" + dec(sh.b.v) + " l=" + dec(sh.a.l) +
         " deal=" + rec.deal_id + "\n";
}

LiuShareRecord parse_liu_share(const std::string& text) {
  auto v = record_fields(text, {"x", "a", "b", "l", "deal"}, "share file");
  const u64 l = parse_u64(v[3], "share l");
  if (l < 2) fail(Errc::MalformedDocument, "share modulus out of range");
  const u64 x = parse_u64(v[0], "share x");
  const u64 a = parse_u64(v[1], "share a");
  const u64 b = parse_u64(v[2], "share b");
  if (x == 0 || x >= l) fail(Errc::MalformedDocument, "share x out of range");
  if (a >= l || b >= l) fail(Errc::MalformedDocument, "share value out of range");
  if (!is_deal_id(v[4])) fail(Errc::MalformedDocument, "share deal id must be 16 hex digits");
  return LiuShareRecord{v[4], LiuShare{x, Scalar(a, l), Scalar(b, l)}};
}

std::string serialize_dealer(const DealerState& dealer, const std::string& deal_id) {
  if (!is_deal_id(deal_id))
    fail(Errc::MalformedDocument, "deal id must be 16 lowercase hex digits");
  if (dealer.poly.coeffs.coeffs.size() != dealer.t)
    fail(Errc::MalformedDocument, "polynomial must carry exactly t coefficients");
  std::string out;
  out += "scheme = ecmss-dealer\n";
  out += "version = 1\n";
  out += "deal = " + deal_id + "\n";
  out += "t = " + dec(dealer.t) + "\n";
  out += "n = " + dec(dealer.n) + "\n";
  out += "m = " + dec(dealer.m) + "\n";
  out += "a0 = " + dec(dealer.a0.v) + "\n";
  out += "b0 = " + dec(dealer.b0.v) + "\n";
  out += "c = " + dec(dealer.c.v) + "\n";
  out += "d = " + dec(dealer.d.v) + "\n";
  std::string poly;
  for (std::size_t i = 0; i < dealer.poly.coeffs.coeffs.size(); ++i) {
    if (i) poly += ',';
    poly += dec(dealer.poly.coeffs.coeffs[i].v);
  }
  out += "poly = " + poly + "\n";
  return out;
}

DealerState parse_dealer(const std::string& text, const BulletinDocument& doc) {
  if (text.empty()) fail(Errc::MalformedDocument, "empty dealer file");
  Cursor cur(text);
  if (expect(cur, "scheme") != "ecmss-dealer")
    fail(Errc::MalformedDocument, "line 1: unknown scheme id");
  const std::string version_s = expect(cur, "version");
  if (parse_u64(version_s, "version") != 1)
    fail(Errc::UnknownSchemeVersion, "only version 1 is understood, found " + version_s);
  const std::string deal = expect(cur, "deal");
  if (!is_deal_id(deal))
    fail(Errc::MalformedDocument, "deal id must be 16 lowercase hex digits");

  const u64 l = doc.bulletin.params.l;
  const u64 t = parse_u64(expect(cur, "t"), "t");
  const u64 n = parse_u64(expect(cur, "n"), "n");
  const u64 m = parse_u64(expect(cur, "m"), "m");
  if (t < 2 || n < t || n >= l || m == 0 || m >= l)
    fail(Errc::MalformedDocument, "dealer counts out of range");
  const Scalar a0 = parse_scalar(expect(cur, "a0"), l, "a0");
  const Scalar b0 = parse_scalar(expect(cur, "b0"), l, "b0");
  const Scalar c = parse_scalar(expect(cur, "c"), l, "c");
  const Scalar d = parse_scalar(expect(cur, "d"), l, "d");
  const std::string poly_s = expect(cur, "poly");
  std::vector<Scalar> coeffs;
  std::size_t start = 0;
  while (start <= poly_s.size()) {
    std::size_t comma = poly_s.find(',', start);
    std::string piece =
        comma == std::string::npos ? poly_s.substr(start) : poly_s.substr(start, comma - start);
    coeffs.push_back(parse_scalar(piece, l, "poly"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!cur.done())
    fail(Errc::MalformedDocument, cur.where() + ": trailing content after the dealer file");
  if (coeffs.size() != t)
    fail(Errc::MalformedDocument, "polynomial must carry exactly t coefficients");
  if (coeffs.front() != a0 || coeffs.back() != b0)
    fail(Errc::MalformedDocument, "polynomial slots disagree with the stored secrets");

  const Bulletin& b = doc.bulletin;
  if (deal != doc.deal_id || t != b.threshold || n != b.V.size() || m != b.R.size() ||
      c != b.qc || d != b.qd)
    fail(Errc::StateMismatch, "dealer file does not belong to this bulletin");
  // V0 pins (a0, b0): the stored slots must reproduce the published
  // consistency point.
  const SystemParams& params = b.params;
  const Scalar v0k = a0 * d - c * b0;
  const Point v0 = scalar_mul(static_cast<long long>(v0k.v), params.ctx.W, params.curve);
  if (v0 != b.V0)
    fail(Errc::StateMismatch, "stored secrets disagree with the published consistency point");

  DealerState out;
  out.a0 = a0;
  out.b0 = b0;
  out.P0 = point_add(scalar_mul(static_cast<long long>(a0.v), params.basis.G, params.curve),
                     scalar_mul(static_cast<long long>(b0.v), params.basis.H, params.curve),
                     params.curve);
  out.poly = ShamirPoly{t, PolyZl{std::move(coeffs)}};
  out.c = c;
  out.d = d;
  out.n = n;
  out.t = t;
  out.m = m;
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw std::runtime_error("cannot replace " + path + ": " + ec.message());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return ss.str();
}

}  // namespace ecmss
