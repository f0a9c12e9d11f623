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

#include "ecmss/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "ecmss/bulletin.hpp"
#include "ecmss/liu.hpp"
#include "ecmss/rng.hpp"

namespace ecmss {

using u64 = std::uint64_t;

namespace {

struct ResolvedPreset {
  Curve curve;
  u64 l = 0;
  u64 exponent = 0;  // N with E(GF(q)) isomorphic to Z_N x Z_N
  std::uint32_t k = 1;
};

u64 isqrt_exact(u64 v) {
  if (v == 0) return 0;
  u64 s = static_cast<u64>(std::sqrt(static_cast<double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s * s == v ? s : 0;
}

u64 strict_u64(const std::string& s, const std::string& what) {
  if (s.empty()) fail(Errc::OutOfRange, what + ": empty integer");
  for (char ch : s)
    if (ch < '0' || ch > '9') fail(Errc::OutOfRange, what + ": `" + s + "` is not a decimal integer");
  u64 v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    fail(Errc::OutOfRange, what + ": integer `" + s + "` out of range");
  return v;
}

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

ResolvedPreset resolve_preset(const SessionConfig& cfg) {
  if (cfg.preset == "paper47") {
    auto F = ext_field_new(47, 6);
    Curve curve(F, F->from_int(4), F->zero());
    const u64 order = order_over_extension(count_points_prime(4, 0, 47), 47, 6);
    return {curve, 103, isqrt_exact(order), 1};
  }
  if (cfg.preset == "toy11") {
    auto F = ext_field_new(11, 2);
    Curve curve(F, F->one(), F->zero());
    const u64 order = order_over_extension(count_points_prime(1, 0, 11), 11, 2);
    return {curve, 3, isqrt_exact(order), 1};
  }
  if (cfg.preset == "custom") {
    const CustomCurve& c = cfg.custom;
    if (c.p == 0 || c.r == 0 || c.l == 0)
      fail(Errc::OutOfRange, "the custom preset needs --p, --r, and --l");
    if (c.a >= c.p || c.b >= c.p)
      fail(Errc::OutOfRange, "custom curve coefficients must lie in the base prime field");
    auto F = ext_field_new(c.p, c.r);
    Curve curve(F, F->from_int(c.a), F->from_int(c.b));
    const u64 order = order_over_extension(count_points_prime(c.a, c.b, c.p), c.p, c.r);
    const u64 expo = isqrt_exact(order);
    if (expo == 0)
      fail(Errc::TorsionNotRational, "the rational group is not of shape Z_N x Z_N");
    return {curve, c.l, expo, c.k};
  }
  fail(Errc::OutOfRange, "unknown preset `" + cfg.preset + "`");
}

// Secret tokens: strict decimal integers take the base-q digit encoding,
// anything else must be a canonical hex element.
std::vector<ExtFieldElement> parse_secret_tokens(const std::vector<std::string>& tokens,
                                                 const FieldPtr& field) {
  std::vector<ExtFieldElement> out;
  for (const std::string& tok : tokens) {
    if (is_decimal(tok))
      out.push_back(field->from_base(strict_u64(tok, "secret")));
    else
      out.push_back(field->parse_hex(tok));
  }
  return out;
}

SecretVector make_secrets(const SessionConfig& cfg, const FieldPtr& field, Rng& rng) {
  SecretVector K;
  if (!cfg.secrets.empty()) {
    K.K = parse_secret_tokens(cfg.secrets, field);
  } else {
    if (cfg.m == 0) fail(Errc::OutOfRange, "at least one secret is required");
    for (u64 i = 0; i < cfg.m; ++i) K.K.push_back(field->random_element(rng));
  }
  return K;
}

CheatSpec parse_cheat(const std::string& s) {
  std::size_t colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size())
    fail(Errc::OutOfRange, "--cheat takes <index>:<mode>, got `" + s + "`");
  CheatSpec spec;
  spec.index = strict_u64(s.substr(0, colon), "cheat index");
  spec.mode = s.substr(colon + 1);
  if (spec.mode != "flip-s" && spec.mode != "flip-x" && spec.mode != "random")
    fail(Errc::OutOfRange, "cheat mode must be flip-s, flip-x, or random");
  return spec;
}

void print_system(const SystemParams& params, std::ostream& out) {
  const FieldPtr& F = params.curve.field;
  out << "p = " << F->p() << "\n";
  out << "r = " << F->r() << "\n";
  std::string mods;
  for (std::size_t i = 0; i < F->modulus().size(); ++i) {
    if (i) mods += ',';
    mods += std::to_string(F->modulus()[i]);
  }
  out << "modulus = " << mods << "\n";
  out << "A = " << params.curve.A.to_hex() << "\n";
  out << "B = " << params.curve.B.to_hex() << "\n";
  out << "q = " << params.q << "\n";
  out << "l = " << params.l << "\n";
  out << "k = " << params.k << "\n";
  out << "G = " << point_to_string(params.basis.G) << "\n";
  out << "H = " << point_to_string(params.basis.H) << "\n";
  out << "alpha = " << params.ctx.alpha.v << "\n";
  out << "beta = " << params.ctx.beta.v << "\n";
  out << "W = " << point_to_string(params.ctx.W) << "\n";
  out << "u = " << params.u.to_hex() << "\n";
}

int cmd_setup(const SessionConfig& cfg, std::ostream& out) {
  const ResolvedPreset preset = resolve_preset(cfg);
  Rng rng(cfg.seed);
  const SystemParams params =
      setup_params(preset.curve, preset.l, preset.exponent, preset.k, rng);
  out << "preset = " << cfg.preset << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "exponent = " << preset.exponent << "\n";
  print_system(params, out);
  return 0;
}

int cmd_deal(const SessionConfig& cfg, const std::string& out_dir, std::ostream& out) {
  namespace fs = std::filesystem;
  const ResolvedPreset preset = resolve_preset(cfg);
  Rng rng(cfg.seed);
  const SystemParams params =
      setup_params(preset.curve, preset.l, preset.exponent, preset.k, rng);
  const SecretVector K = make_secrets(cfg, params.curve.field, rng);
  const DealResult res = deal(params, cfg.t, cfg.n, K, rng);
  const BulletinDocument doc = make_document(res.bulletin);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  const std::string board = (dir / (doc.deal_id + ".bulletin")).string();
  write_file_atomic(board, serialize(doc));
  out << "deal = " << doc.deal_id << "\n";
  out << "bulletin = " << board << "\n";
  for (const ShamirShare& sh : res.shares) {
    const std::string path =
        (dir / (doc.deal_id + ".share." + std::to_string(sh.x.v))).string();
    write_file_atomic(path, serialize_share(ShareRecord{doc.deal_id, sh}));
    out << "share." << sh.x.v << " = " << path << "\n";
  }
  const std::string dealer_path = (dir / (doc.deal_id + ".dealer")).string();
  write_file_atomic(dealer_path, serialize_dealer(res.dealer, doc.deal_id));
  out << "dealer = " << dealer_path << "\n";
  return 0;
}

// Loads share files against a document; deal-id mismatches are file
// errors, so they surface before any protocol judgment.
std::vector<ShamirShare> load_shares(const std::vector<std::string>& paths,
                                     const BulletinDocument& doc, std::ostream& out,
                                     bool& file_error) {
  std::vector<ShamirShare> shares;
  for (const std::string& path : paths) {
    ShareRecord rec = parse_share(read_text_file(path));
    if (rec.deal_id != doc.deal_id || rec.share.x.l != doc.bulletin.params.l) {
      out << "deal-mismatch share=" << path << "\n";
      file_error = true;
      return shares;
    }
    shares.push_back(rec.share);
  }
  return shares;
}

int cmd_verify(const std::string& bulletin_path, const std::vector<std::string>& share_paths,
               std::ostream& out) {
  const BulletinDocument doc = deserialize(read_text_file(bulletin_path));
  bool file_error = false;
  const std::vector<ShamirShare> shares = load_shares(share_paths, doc, out, file_error);
  if (file_error) return 2;
  int rc = 0;
  for (const ShamirShare& sh : shares) {
    bool ok = false;
    try {
      ok = verify_share(sh, doc.bulletin);
    } catch (const Error& e) {
      if (e.code() != Errc::UnknownParticipant) throw;
      out << "unknown-participant participant=" << sh.x.v << "\n";
      rc = 1;
      continue;
    }
    if (ok) {
      out << "share-ok participant=" << sh.x.v << "\n";
    } else {
      out << "share-mismatch participant=" << sh.x.v << "\n";
      rc = 1;
    }
  }
  return rc;
}

void print_secrets(const SecretVector& K, std::ostream& out) {
  out << "secrets = " << K.K.size() << "\n";
  for (std::size_t i = 0; i < K.K.size(); ++i) {
    out << "K." << i + 1 << " = " << K.K[i].to_hex() << "\n";
    out << "K." << i + 1 << ".int = " << K.K[i].to_base() << "\n";
  }
}

int cmd_reconstruct(const std::string& bulletin_path,
                    const std::vector<std::string>& share_paths, std::ostream& out) {
  const BulletinDocument doc = deserialize(read_text_file(bulletin_path));
  bool file_error = false;
  const std::vector<ShamirShare> shares = load_shares(share_paths, doc, out, file_error);
  if (file_error) return 2;
  if (shares.size() < doc.bulletin.threshold) {
    out << "not-enough-shares\n";
    return 2;
  }
  const std::vector<u64> cheaters = identify_cheaters(shares, doc.bulletin);
  if (cheaters.empty()) {
    out << "cheaters = none\n";
  } else {
    out << "cheaters = ";
    for (std::size_t i = 0; i < cheaters.size(); ++i) out << (i ? "," : "") << cheaters[i];
    out << "\n";
  }
  try {
    const SecretVector K = reconstruct(shares, doc.bulletin);
    print_secrets(K, out);
    return 0;
  } catch (const CheaterError&) {
    out << "insufficient-honest-shares\n";
    return 1;
  } catch (const Error& e) {
    if (e.code() != Errc::InconsistentShares) throw;
    out << "inconsistent-shares\n";
    return 1;
  }
}

int cmd_add_secret(const std::string& bulletin_path, const std::string& dealer_path,
                   const std::string& secret_tok, std::ostream& out) {
  BulletinDocument doc = deserialize(read_text_file(bulletin_path));
  DealerState dealer = parse_dealer(read_text_file(dealer_path), doc);
  const ExtFieldElement K =
      parse_secret_tokens({secret_tok}, doc.bulletin.params.curve.field).front();
  doc.bulletin = add_secret(dealer, doc.bulletin, K);
  dealer.m += 1;
  write_file_atomic(bulletin_path, serialize(doc));
  write_file_atomic(dealer_path, serialize_dealer(dealer, doc.deal_id));
  out << "deal = " << doc.deal_id << "\n";
  out << "m = " << doc.bulletin.R.size() << "\n";
  out << "R." << doc.bulletin.R.size() << " = " << doc.bulletin.R.back().to_hex() << "\n";
  return 0;
}

int simulate_liu(const SessionConfig& cfg, const ResolvedPreset& preset, std::ostream& out) {
  if (!cfg.cheaters.empty())
    fail(Errc::OutOfRange, "the baseline scheme has no verification step; --cheat applies to the proposed scheme");
  if (!cfg.secrets.empty())
    fail(Errc::OutOfRange, "baseline secrets are curve points; they are sampled from the seed");
  const Curve& curve = preset.curve;
  const u64 l = preset.l;
  Rng rng(cfg.seed);
  const TorsionBasis basis = sample_generating_pair(curve, l, preset.exponent, rng);
  Scalar alpha(0, l), beta(0, l);
  while (alpha.is_zero() && beta.is_zero()) {
    alpha = Scalar(rng.below(l), l);
    beta = Scalar(rng.below(l), l);
  }
  const SelfPairingCtx ctx = make_self_pairing_ctx(basis, alpha, beta, curve);

  const LiuDealerState dealer = liu_random_dealer(cfg.t, ctx, rng);
  const std::vector<LiuShare> shares = liu_distribute(dealer, cfg.t, cfg.n);
  for (const LiuShare& sh : shares)
    out << "share." << sh.j << " = (" << sh.a.v << "," << sh.b.v << ")\n";

  std::vector<Point> secrets;
  std::vector<std::pair<Scalar, Scalar>> cd;
  for (u64 i = 0; i < cfg.m; ++i) {
    secrets.push_back(random_point(curve, rng));
    cd.emplace_back(Scalar(rng.nonzero_below(l), l), Scalar(rng.nonzero_below(l), l));
  }
  const std::vector<LiuSecretEntry> entries = liu_publish(dealer, secrets, cd, curve);

  std::vector<u64> js;
  for (u64 j = 1; j <= cfg.t; ++j) js.push_back(j);
  bool all_ok = true;
  for (u64 i = 0; i < cfg.m; ++i) {
    std::vector<Point> pseudo;
    for (u64 j : js) pseudo.push_back(liu_pseudo_share(entries[i], shares[j - 1], ctx, curve));
    const Point rec = liu_reconstruct(i + 1, js, pseudo, entries[i], ctx, curve);
    const bool ok = rec == secrets[i];
    all_ok = all_ok && ok;
    out << "recovered." << i + 1 << " = " << (ok ? "ok" : "bad") << "\n";
  }
  out << "result = " << (all_ok ? "ok" : "recovery-mismatch") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int simulate(const SessionConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  const ResolvedPreset preset = resolve_preset(cfg);
  out << "scheme = " << cfg.scheme << "\n";
  out << "preset = " << cfg.preset << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "t = " << cfg.t << "\n";
  out << "n = " << cfg.n << "\n";
  const u64 m = cfg.secrets.empty() ? cfg.m : cfg.secrets.size();
  out << "m = " << m << "\n";
  if (cfg.scheme == "liu") return simulate_liu(cfg, preset, out);
  if (cfg.scheme != "proposed")
    fail(Errc::OutOfRange, "scheme must be `proposed` or `liu`");

  for (const CheatSpec& ch : cfg.cheaters) {
    if (ch.index == 0 || ch.index > cfg.n)
      fail(Errc::OutOfRange, "cheat index must name a participant in 1..n");
  }

  Rng rng(cfg.seed);
  const SystemParams params =
      setup_params(preset.curve, preset.l, preset.exponent, preset.k, rng);
  const SecretVector K = make_secrets(cfg, params.curve.field, rng);
  const DealResult res = deal(params, cfg.t, cfg.n, K, rng);
  const BulletinDocument doc = make_document(res.bulletin);
  out << "deal = " << doc.deal_id << "\n";

  const u64 l = params.l;
  std::vector<ShamirShare> submitted = res.shares;
  for (const CheatSpec& ch : cfg.cheaters) {
    ShamirShare& sh = submitted[ch.index - 1];
    if (ch.mode == "flip-s") {
      sh.s = sh.s + Scalar(1, l);
    } else if (ch.mode == "flip-x") {
      sh.x = Scalar((sh.x.v + cfg.n - 1) % (l - 1) + 1, l);
    } else {
      sh.s = Scalar(rng.below(l), l);
    }
    out << "cheat." << ch.index << " = " << ch.mode << "\n";
  }

  for (const ShamirShare& sh : submitted) {
    std::string verdict;
    try {
      verdict = verify_share(sh, doc.bulletin) ? "ok" : "bad";
    } catch (const Error& e) {
      if (e.code() != Errc::UnknownParticipant) throw;
      verdict = "unknown";
    }
    out << "verify." << sh.x.v << " = " << verdict << "\n";
  }

  const std::vector<u64> cheaters = identify_cheaters(submitted, doc.bulletin);
  if (cheaters.empty()) {
    out << "cheaters = none\n";
  } else {
    out << "cheaters = ";
    for (std::size_t i = 0; i < cheaters.size(); ++i) out << (i ? "," : "") << cheaters[i];
    out << "\n";
  }

  try {
    const SecretVector rec = reconstruct(submitted, doc.bulletin);
    bool match = rec.K.size() == K.K.size();
    for (std::size_t i = 0; match && i < rec.K.size(); ++i) match = rec.K[i] == K.K[i];
    out << "recovered = " << rec.K.size() << "\n";
    for (std::size_t i = 0; i < rec.K.size(); ++i)
      out << "K." << i + 1 << " = " << rec.K[i].to_hex() << "\n";
    out << "result = " << (match ? "ok" : "recovery-mismatch") << "\n";
    return match ? 0 : 1;
  } catch (const CheaterError&) {
    out << "recovered = 0\n";
    out << "result = insufficient-honest-shares\n";
    return 1;
  } catch (const Error& e) {
    if (e.code() != Errc::InconsistentShares) throw;
    out << "recovered = 0\n";
    out << "result = inconsistent-shares\n";
    return 1;
  }
}

int liu_demo(u64 seed, std::ostream& out, std::ostream& err) {
  SessionConfig cfg;
  cfg.preset = "paper47";
  const ResolvedPreset preset = resolve_preset(cfg);
  const Curve& curve = preset.curve;
  const u64 l = preset.l;
  Rng rng(seed);
  const TorsionBasis basis = sample_generating_pair(curve, l, preset.exponent, rng);
  const SelfPairingCtx ctx = make_self_pairing_ctx(basis, Scalar(51, l), Scalar(35, l), curve);
  out << "preset = paper47\n";
  out << "seed = " << seed << "\n";
  out << "alpha = 51\n";
  out << "beta = 35\n";

  const LiuDealerState dealer{{Scalar(11, l), Scalar(25, l)},
                              {Scalar(15, l), Scalar(33, l)},
                              ctx};
  const std::vector<LiuShare> shares = liu_distribute(dealer, 2, 3);
  for (const LiuShare& sh : shares)
    out << "share." << sh.j << " = (" << sh.a.v << "," << sh.b.v << ")\n";

  const Point M1 = random_point(curve, rng);
  const Point M2 = random_point(curve, rng);
  const std::vector<std::pair<Scalar, Scalar>> cd{{Scalar(15, l), Scalar(11, l)},
                                                  {Scalar(23, l), Scalar(39, l)}};
  const std::vector<LiuSecretEntry> entries = liu_publish(dealer, {M1, M2}, cd, curve);

  bool all_ok = true;
  auto claim = [&](const char* label, bool ok) {
    out << label << " : " << (ok ? "OK" : "FAIL") << "\n";
    if (!ok) err << "relation failed: " << label << "\n";
    all_ok = all_ok && ok;
  };

  const Point S11 = liu_pseudo_share(entries[0], shares[0], ctx, curve);
  const Point S12 = liu_pseudo_share(entries[0], shares[1], ctx, curve);
  const Point S21 = liu_pseudo_share(entries[1], shares[0], ctx, curve);
  const Point S22 = liu_pseudo_share(entries[1], shares[1], ctx, curve);
  claim("S11 = 15*W", S11 == scalar_mul(15, ctx.W, curve));
  claim("S21 = 9*W", S21 == scalar_mul(9, ctx.W, curve));
  claim("S22 = 102*W", S22 == scalar_mul(102, ctx.W, curve));

  // T_i over the pooling subset {1,2}: row i-1 of the inverse square
  // Vandermonde against that secret's pseudo-shares.
  const MatZl Vinv = mat_inv(vandermonde(2, 2, l));
  auto combine = [&](std::size_t row, const Point& P1, const Point& P2) {
    return point_add(scalar_mul(static_cast<long long>(Vinv.at(row, 0).v), P1, curve),
                     scalar_mul(static_cast<long long>(Vinv.at(row, 1).v), P2, curve), curve);
  };
  const Point T1 = combine(0, S11, S12);
  const Point T2 = combine(1, S21, S22);
  claim("T1 == W", T1 == ctx.W);
  claim("T2 = 93*W", T2 == scalar_mul(93, ctx.W, curve));
  claim("R2 mask = 93*W", point_sub(entries[1].R, M2, curve) == scalar_mul(93, ctx.W, curve));

  const std::vector<u64> js{1, 2};
  const Point M1rec = liu_reconstruct(1, js, {S11, S12}, entries[0], ctx, curve);
  const Point M2rec = liu_reconstruct(2, js, {S21, S22}, entries[1], ctx, curve);
  claim("recovered M1 == input M1", M1rec == M1);
  claim("recovered M2 == input M2", M2rec == M2);

  out << "result = " << (all_ok ? "ok" : "relation-failure") << "\n";
  return all_ok ? 0 : 1;
}

namespace {

int cmd_bench(u64 seed, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  auto ns_per = [](clock::time_point a, clock::time_point b, u64 iters) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count() /
           static_cast<long long>(iters);
  };
  SessionConfig cfg;
  const ResolvedPreset preset = resolve_preset(cfg);
  Rng rng(seed);
  const SystemParams params =
      setup_params(preset.curve, preset.l, preset.exponent, preset.k, rng);
  const Curve& curve = params.curve;
  const FieldPtr& F = curve.field;

  ExtFieldElement x = F->random_element(rng);
  const ExtFieldElement y = F->random_element(rng);
  auto t0 = clock::now();
  for (int i = 0; i < 200000; ++i) x = x * y;
  auto t1 = clock::now();
  out << "bench.field_mul_ns = " << ns_per(t0, t1, 200000) << "\n";

  Point P = random_point(curve, rng);
  const Point Q = random_point(curve, rng);
  t0 = clock::now();
  for (int i = 0; i < 20000; ++i) P = point_add(P, Q, curve);
  t1 = clock::now();
  out << "bench.point_add_ns = " << ns_per(t0, t1, 20000) << "\n";

  // 62039 is coprime to the group exponent, so the walk never hits infinity.
  t0 = clock::now();
  for (int i = 0; i < 2000; ++i) P = scalar_mul(62039, P, curve);
  t1 = clock::now();
  out << "bench.scalar_mul_ns = " << ns_per(t0, t1, 2000) << "\n";

  const Point G = params.basis.G;
  const Point H = params.basis.H;
  ExtFieldElement acc = F->one();
  t0 = clock::now();
  for (int i = 0; i < 100; ++i) acc = acc * weil_pair(G, H, params.l, curve);
  t1 = clock::now();
  out << "bench.weil_pair_ns = " << ns_per(t0, t1, 100) << "\n";

  t0 = clock::now();
  for (int i = 0; i < 20; ++i) {
    SecretVector K;
    K.K.push_back(F->random_element(rng));
    K.K.push_back(F->random_element(rng));
    const DealResult res = deal(params, 2, 3, K, rng);
    const SecretVector rec = reconstruct(res.shares, res.bulletin);
    if (rec.K.size() != 2) fail(Errc::InconsistentShares, "bench recovery failed");
  }
  t1 = clock::now();
  out << "bench.deal_reconstruct_ns = " << ns_per(t0, t1, 20) << "\n";
  return 0;
}

int classify(const Error& e) {
  switch (e.code()) {
    case Errc::CheaterDetected:
    case Errc::InconsistentShares:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verifiable threshold multi-secret sharing on elliptic-curve torsion points"};
  app.require_subcommand(1);

  SessionConfig cfg;
  std::string out_dir = ".";
  std::string bulletin_path;
  std::string dealer_path;
  std::string secret_tok;
  std::string secrets_csv;
  std::vector<std::string> share_paths;
  std::vector<std::string> cheat_specs;

  auto add_preset_flags = [&](CLI::App* cmd) {
    cmd->add_option("--preset", cfg.preset, "paper47, toy11, or custom")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "64-bit RNG seed")->capture_default_str();
    cmd->add_option("--p", cfg.custom.p, "custom preset: base field prime");
    cmd->add_option("--r", cfg.custom.r, "custom preset: extension degree");
    cmd->add_option("--a", cfg.custom.a, "custom preset: curve coefficient A (in the base field)");
    cmd->add_option("--b", cfg.custom.b, "custom preset: curve coefficient B (in the base field)");
    cmd->add_option("--l", cfg.custom.l, "custom preset: prime torsion order");
    cmd->add_option("--k", cfg.custom.k, "custom preset: extension step to the torsion field");
  };

  CLI::App* setup = app.add_subcommand("setup", "sample and print a system parameter set");
  add_preset_flags(setup);

  CLI::App* deal_cmd =
      app.add_subcommand("deal", "run the dealer; writes bulletin, share, and dealer files");
  add_preset_flags(deal_cmd);
  deal_cmd->add_option("--t", cfg.t, "threshold")->capture_default_str();
  deal_cmd->add_option("--n", cfg.n, "participant count")->capture_default_str();
  deal_cmd->add_option("--m", cfg.m, "random secrets to deal when --secrets is absent")
      ->capture_default_str();
  deal_cmd->add_option("--secrets", secrets_csv,
                       "comma-separated secrets (decimal integers or hex elements)");
  deal_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

  CLI::App* verify_cmd = app.add_subcommand("verify", "check share files against a bulletin");
  verify_cmd->add_option("--bulletin", bulletin_path, "bulletin file")->required();
  verify_cmd->add_option("--share", share_paths, "share file (repeatable)")->required();

  CLI::App* rec_cmd =
      app.add_subcommand("reconstruct", "recover every secret from share files");
  rec_cmd->add_option("--bulletin", bulletin_path, "bulletin file")->required();
  rec_cmd->add_option("--share", share_paths, "share file (repeatable)")->required();

  CLI::App* add_cmd =
      app.add_subcommand("add-secret", "append one recovery code to an existing deal");
  add_cmd->add_option("--bulletin", bulletin_path, "bulletin file")->required();
  add_cmd->add_option("--dealer", dealer_path, "private dealer file")->required();
  add_cmd->add_option("--secret", secret_tok, "decimal integer or hex element")->required();

  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "deterministic in-process session with optional cheaters");
  add_preset_flags(sim_cmd);
  sim_cmd->add_option("--scheme", cfg.scheme, "proposed or liu")->capture_default_str();
  sim_cmd->add_option("--t", cfg.t, "threshold")->capture_default_str();
  sim_cmd->add_option("--n", cfg.n, "participant count")->capture_default_str();
  sim_cmd->add_option("--m", cfg.m, "random secrets when --secrets is absent")
      ->capture_default_str();
  sim_cmd->add_option("--secrets", secrets_csv,
                      "comma-separated secrets (decimal integers or hex elements)");
  sim_cmd->add_option("--cheat", cheat_specs, "<index>:<mode>, repeatable; modes flip-s, flip-x, random");

  CLI::App* liu_cmd = app.add_subcommand(
      "liu-demo", "replay the worked two-secret example of the baseline scheme");
  liu_cmd->add_option("--seed", cfg.seed, "64-bit RNG seed")->capture_default_str();

  CLI::App* bench_cmd = app.add_subcommand("bench", "time the core operations");
  bench_cmd->add_option("--seed", cfg.seed, "64-bit RNG seed")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!secrets_csv.empty()) cfg.secrets = split_csv(secrets_csv);
    for (const std::string& spec : cheat_specs) cfg.cheaters.push_back(parse_cheat(spec));

    if (setup->parsed()) return cmd_setup(cfg, out);
    if (deal_cmd->parsed()) return cmd_deal(cfg, out_dir, out);
    if (verify_cmd->parsed()) return cmd_verify(bulletin_path, share_paths, out);
    if (rec_cmd->parsed()) return cmd_reconstruct(bulletin_path, share_paths, out);
    if (add_cmd->parsed()) return cmd_add_secret(bulletin_path, dealer_path, secret_tok, out);
    if (sim_cmd->parsed()) return simulate(cfg, out, err);
    if (liu_cmd->parsed()) return liu_demo(cfg.seed, out, err);
    if (bench_cmd->parsed()) return cmd_bench(cfg.seed, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const CheaterError& e) {
    out << "error = " << errc_name(e.code()) << "\n";
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    out << "error = " << errc_name(e.code()) << "\n";
    err << e.what() << "\n";
    return classify(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ecmss
