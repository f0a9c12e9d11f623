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
#include <stdexcept>
#include <string>
#include <vector>

namespace ecmss {

/// Error taxonomy shared by every module. Each enumerator names one
/// contract violation; the CLI maps them onto exit codes and reason strings.
enum class Errc {
  // algebra
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  DuplicateX,
  ZeroX,
  BadDims,
  Singular,
  OutOfRange,
  // curve
  OffCurveInput,
  TorsionNotRational,
  // pairing
  BasisMismatch,
  NotTorsion,
  DegenerateEvaluation,
  UnsupportedCurveForm,
  BadDistortionUnit,
  NonPrimitiveSelfValue,
  DegenerateIndex,
  IdentityPoint,
  // shamir
  ThresholdTooSmall,
  WrongShareCount,
  // liu / mvss
  TooManySecrets,
  BadThreshold,
  UnknownParticipant,
  NotEnoughShares,
  CheaterDetected,
  InconsistentShares,
  StateMismatch,
  // bulletin
  MalformedDocument,
  UnknownSchemeVersion,
  WrongScheme,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// CheaterDetected with the identified participant indices attached.
class CheaterError : public Error {
 public:
  explicit CheaterError(std::vector<std::uint64_t> indices, const std::string& msg)
      : Error(Errc::CheaterDetected, msg), indices_(std::move(indices)) {}

  const std::vector<std::uint64_t>& cheaters() const { return indices_; }

 private:
  std::vector<std::uint64_t> indices_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ecmss
