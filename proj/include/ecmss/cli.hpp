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
#include <iosfwd>
#include <string>
#include <vector>

namespace ecmss {

/// One corrupted participant in a simulated session: which share and how
/// it lies.
struct CheatSpec {
  std::uint64_t index = 0;
  std::string mode;  // flip-s | flip-x | random
};

/// Curve description for the custom preset. The coefficients live in the
/// base prime field so the point count can be taken there and lifted.
struct CustomCurve {
  std::uint64_t p = 0;
  std::uint32_t r = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t l = 0;
  std::uint32_t k = 1;
};

/// Everything a simulated session depends on. Equal configs produce
/// byte-identical reports and deal files.
struct SessionConfig {
  std::string scheme = "proposed";  // proposed | liu
  std::string preset = "paper47";   // paper47 | toy11 | custom
  std::uint64_t t = 2;
  std::uint64_t n = 3;
  std::uint64_t m = 2;              // random secrets dealt when `secrets` is empty
  std::vector<std::string> secrets;  // decimal integers or hex field elements
  std::vector<CheatSpec> cheaters;
  std::uint64_t seed = 1;
  CustomCurve custom;
};

/// Full dealer/participant lifecycle in one process: deal, optional share
/// corruption, a verification round, cheater identification, and
/// reconstruction. The report is line-oriented `key = value` text on
/// `out`. Returns the process exit code.
int simulate(const SessionConfig& config, std::ostream& out, std::ostream& err);

/// Replays the worked two-secret (2,3) example of the baseline
/// point-sharing scheme with its published scalar inputs on a freshly
/// sampled basis, printing one transcript line per checked relation.
/// A failed relation prints FAIL and returns 1.
int liu_demo(std::uint64_t seed, std::ostream& out, std::ostream& err);

/// Command-line front end. `args` excludes the program name. Exit code 0
/// on success, 1 on protocol failure (with a machine-readable reason on
/// `out`), 2 on usage and file errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecmss
