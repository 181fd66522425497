/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ulam/pattern.hpp"
#include "ulam/rigidity.hpp"

namespace ulam {

struct Run {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs of consecutive integers, in order.
struct RunDecomposition {
  std::uint64_t n = 0;
  std::vector<Run> runs;
};

/// Requires a strictly increasing input.
RunDecomposition runs(std::span<const std::uint64_t> sorted_set, std::uint64_t n = 0);

/// Run [slope_lo*n + intercept_lo, slope_hi*n + intercept_hi].
struct MinedComponent {
  std::size_t run_index = 0;
  std::int64_t slope_lo = 0;
  std::int64_t intercept_lo = 0;
  std::int64_t slope_hi = 0;
  std::int64_t intercept_hi = 0;
  std::vector<std::uint64_t> verified_on;
};

struct Misfit {
  std::size_t run_index = 0;
  std::string reason;
};

struct FitResult {
  std::vector<MinedComponent> components;
  std::vector<Misfit> misaligned;
};

/// Aligns runs by index and fits integer endpoints from the two extreme n
/// values, then checks the fit exactly on every other sample. Runs that fail
/// are listed in `misaligned`. Throws alignment_failure if run counts differ
/// and precondition for fewer than three samples or samples off the class.
FitResult fit_components(std::span<const RunDecomposition> samples, std::uint64_t modulus,
                         std::uint64_t residue);

struct MineSpec {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  std::vector<std::uint64_t> train;    // n values used for fitting
  std::vector<std::uint64_t> holdout;  // n values only used for verification
  std::int64_t c = 1;                  // segment [1, c*n + d]
  std::int64_t d = 0;
};

struct MineResult {
  PatternCode code;  // trivial masks, applicability {modulus, residue}
  FitResult fit;
  std::vector<SweepEntry> verification;  // one per held-out n
};

/// Mines a mask-free code for U(1, n). Throws fit_failure if any run cannot
/// be fitted.
MineResult mine(const MineSpec& spec, const CheckOptions& opts = {}, unsigned threads = 1);

/// U(1, n) ∩ [1, c*n + d] as maximal runs.
RunDecomposition segment_runs(std::uint64_t n, std::int64_t c, std::int64_t d,
                              Limits limits = default_limits());

}  // namespace ulam
