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
#include <vector>

#include "ecmss/liu.hpp"
#include "ecmss/mvss.hpp"

namespace ecmss {

/// Published baseline-scheme material riding on the same system
/// parameters: its own threshold plus one (c, d, R) record per secret.
struct LiuBlock {
  std::uint64_t t = 0;
  std::vector<LiuSecretEntry> entries;
};

/// On-disk form of the notice board: header, the threshold-scheme
/// bulletin, and an optional baseline-scheme appendix. The deal id is the
/// 16-hex-digit hash of the parameter and challenge lines, so share files
/// name the deal they belong to.
struct BulletinDocument {
  std::uint32_t version = 1;
  std::string deal_id;
  Bulletin bulletin;
  std::optional<LiuBlock> liu;
};

/// One participant's private share file: the share plus the deal it
/// belongs to.
struct ShareRecord {
  std::string deal_id;
  ShamirShare share;
};

/// Baseline-scheme share file: participant index j doubles as the x value.
struct LiuShareRecord {
  std::string deal_id;
  LiuShare share;
};

/// 16 lowercase hex digits hashing the canonical parameter and challenge
/// lines (everything fixed at deal time; V and R stay outside so tampering
/// them is caught by the protocol checks, not by an id mismatch).
std::string compute_deal_id(const Bulletin& bulletin);

/// Wraps a bulletin with its computed deal id.
BulletinDocument make_document(const Bulletin& bulletin);

/// Canonical text form: UTF-8 `key = value` lines in fixed order, field
/// elements in the algebra hex encoding, points as `x:y` or `inf`.
/// Verification points are keyed by their participant x value.
std::string serialize(const BulletinDocument& doc);

/// Strict inverse of serialize. Enforces canonical line order and
/// spelling, replays every structural invariant (curve membership, torsion
/// order, W and Q recomputation, the distortion unit, the deal id), and
/// rejects unknown keys. Structural and semantic faults raise
/// MalformedDocument with the offending line; only the version line can
/// raise UnknownSchemeVersion.
BulletinDocument deserialize(const std::string& text);

/// Public-parameter count of a threshold-scheme document under the
/// documented convention: {curve with its basis, q, l, k, W, Q, V0} as
/// seven fixed items, plus one per verification point and recovery code.
/// Documents carrying a baseline appendix are out of scope.
std::uint64_t param_count(const BulletinDocument& doc);

std::string serialize_share(const ShareRecord& rec);
ShareRecord parse_share(const std::string& text);

std::string serialize_liu_share(const LiuShareRecord& rec);
LiuShareRecord parse_liu_share(const std::string& text);

/// Private dealer file for a deal; m tracks the bulletin's current secret
/// count, so appending a secret rewrites both files.
std::string serialize_dealer(const DealerState& dealer, const std::string& deal_id);

/// Rebuilds the dealer state against its bulletin: recomputes P0 from the
/// stored slots and requires the file to describe exactly this document
/// (deal id, thresholds, counts, challenge pair), else StateMismatch.
DealerState parse_dealer(const std::string& text, const BulletinDocument& doc);

/// Whole-file atomic write: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

/// Reads a whole file; throws std::runtime_error when unreadable.
std::string read_text_file(const std::string& path);

}  // namespace ecmss
