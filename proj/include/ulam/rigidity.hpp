/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ulam/engine.hpp"
#include "ulam/error.hpp"
#include "ulam/pattern.hpp"

namespace ulam {

/// Policy switches shared by the analyses that consume pattern codes.
struct CheckOptions {
  bool override_applicability = false;
  bool allow_non_coprime = false;
  Limits limits = default_limits();
};

enum class MismatchKind { in_ulam_not_pattern, in_pattern_not_ulam };

const char* to_string(MismatchKind kind) noexcept;

struct Mismatch {
  std::uint64_t m = 0;
  MismatchKind kind = MismatchKind::in_ulam_not_pattern;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of comparing U(a,b) with a pattern code on [first, last]. An empty
/// range (first > last) agrees vacuously. Agreement only ever means
/// "verified on this segment".
struct SegmentReport {
  UlamParams params;
  std::string code_id;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  bool agrees = true;
  std::optional<Mismatch> first_mismatch;
  std::uint64_t matched_count = 0;  // positions in range where both sides agree
};

/// Throws applicability unless the code admits params.b() or the override
/// is set; throws non_coprime for flagged params without the override.
void check_applicable(const PatternCode& code, const UlamParams& params,
                      const CheckOptions& opts);

SegmentReport verify_segment(const PatternCode& code, const UlamPrefix& prefix,
                             std::uint64_t first, std::uint64_t last,
                             const CheckOptions& opts = {});

/// Generates U(a,b) up to max(last, b) and compares.
SegmentReport verify_segment(const PatternCode& code, const UlamParams& params,
                             std::uint64_t first, std::uint64_t last,
                             const CheckOptions& opts = {});

/// Least N <= last such that [N, last] agrees, or nothing when the code
/// disagrees at `last` itself.
std::optional<std::uint64_t> search_threshold(const PatternCode& code, const UlamPrefix& prefix,
                                              std::uint64_t last, const CheckOptions& opts = {});
std::optional<std::uint64_t> search_threshold(const PatternCode& code, const UlamParams& params,
                                              std::uint64_t last, const CheckOptions& opts = {});

/// Sweep over U(a, n) for n in `n_values`, each checked on [1, c*n + d].
struct SweepSpec {
  std::uint64_t a = 1;
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  std::vector<std::uint64_t> n_values;
  std::int64_t c = 1;
  std::int64_t d = 0;
};

struct SweepEntry {
  std::uint64_t n = 0;
  std::optional<SegmentReport> report;
  std::optional<ErrorCode> error;
  std::string message;
};

/// One entry per n, in input order. Failures are recorded per n and the sweep
/// carries on. `threads` > 1 spreads the n values over worker threads.
std::vector<SweepEntry> family_sweep(const PatternCode& code, const SweepSpec& spec,
                                     const CheckOptions& opts = {}, unsigned threads = 1);

}  // namespace ulam
