/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulam {

/// Failure categories shared by every module. The numeric values are the
/// ones exposed through the C API (see ulam.h) and must not be renumbered.
enum class ErrorCode : int {
  invalid_parameters = 1,
  horizon_too_large = 2,
  precondition = 3,
  insufficient_horizon = 4,
  overflow = 5,
  malformed_code = 6,
  parse_error = 7,
  unbounded_pattern = 8,
  applicability = 9,
  non_coprime = 10,
  stale_candidate = 11,
  alignment_failure = 12,
  fit_failure = 13,
  io_error = 14,
  corrupt_cache = 15,
  version_mismatch = 16,
  internal = 99,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when generation would exceed the configured horizon limit.
/// Carries how far the sieve got before giving up.
class HorizonError : public Error {
 public:
  HorizonError(const std::string& what, std::uint64_t decided, std::uint64_t terms)
      : Error(ErrorCode::horizon_too_large, what),
        decided_horizon_(decided),
        terms_found_(terms) {}

  std::uint64_t decided_horizon() const noexcept { return decided_horizon_; }
  std::uint64_t terms_found() const noexcept { return terms_found_; }

 private:
  std::uint64_t decided_horizon_;
  std::uint64_t terms_found_;
};

/// Codec parse failure, with the byte offset reported by the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(ErrorCode::parse_error, what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ulam
