// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace specmat {

// Every failure the library can raise, in one closed list so callers
// (notably the CLI) can map failures onto stable exit codes.
enum class Errc {
  // usage / I/O class (exit code 1)
  Usage,
  Io,
  NonFinite,
  MalformedHeader,
  IndexOutOfRange,
  // precondition class (exit code 3)
  BandTooWide,
  OddDimension,
  DimensionTooSmall,
  SingularMatrix,
  ZeroDenominator,
  NegativeDiscriminant,
  DegenerateEigenvector,
  ZeroCoefficient,
  SignCondition,
  RatioConstraintViolated,
  UnsupportedAnsatz,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Usage: return "Usage";
    case Errc::Io: return "Io";
    case Errc::NonFinite: return "NonFinite";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BandTooWide: return "BandTooWide";
    case Errc::OddDimension: return "OddDimension";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NegativeDiscriminant: return "NegativeDiscriminant";
    case Errc::DegenerateEigenvector: return "DegenerateEigenvector";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::SignCondition: return "SignCondition";
    case Errc::RatioConstraintViolated: return "RatioConstraintViolated";
    case Errc::UnsupportedAnsatz: return "UnsupportedAnsatz";
  }
  return "Unknown";
}

// Exit-code policy shared by the CLI and its tests:
// 0 success, 1 usage/I-O, 2 verification failure, 3 precondition violation.
inline int exit_code_for(Errc c) {
  switch (c) {
    case Errc::Usage:
    case Errc::Io:
    case Errc::NonFinite:
    case Errc::MalformedHeader:
    case Errc::IndexOutOfRange:
      return 1;
    default:
      return 3;
  }
}

}  // namespace specmat
