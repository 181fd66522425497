/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ulam/engine.hpp"
#include "ulam/pattern.hpp"
#include "ulam/rational.hpp"
#include "ulam/rigidity.hpp"

namespace ulam {

/// g_k = u_{k+1} - u_k over consecutive prefix terms.
std::vector<std::uint64_t> gaps(const UlamPrefix& prefix);

/// Eventual periodicity of a finite gap list: g[k+p] == g[k] for every
/// threshold <= k < K - p, where K is the number of gaps. Only a candidate;
/// a longer list may break it.
struct PeriodicityCandidate {
  std::uint64_t threshold = 0;  // N, an index into the gap list
  std::uint64_t period = 0;     // p
  std::vector<std::uint64_t> period_gaps;
  std::uint64_t period_sum = 0;  // G
  std::uint64_t periods_observed = 0;
  Rational coverage;  // (K - N) / K

  friend bool operator==(const PeriodicityCandidate&, const PeriodicityCandidate&) = default;
};

struct PeriodPolicy {
  std::uint64_t min_periods = 3;
  Rational min_coverage{1, 2};
};

/// Smallest period first, then the earliest threshold for it, among
/// candidates whose periodic tail holds at least min_periods full periods
/// and min_coverage of the list.
std::optional<PeriodicityCandidate> detect_period(std::span<const std::uint64_t> gaps,
                                                  const PeriodPolicy& policy = {});

/// Throws stale_candidate unless the candidate's period holds on the gap
/// list from its threshold onward.
void check_candidate(const PeriodicityCandidate& cand, std::span<const std::uint64_t> gaps);

/// p / G in lowest terms.
Rational density_from_period(const PeriodicityCandidate& cand);

struct DensityEstimate {
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  Rational ratio;  // count / (n + 1)
};

DensityEstimate empirical_density(const UlamParams& params, std::uint64_t n,
                                  Limits limits = default_limits());
DensityEstimate empirical_density(const UlamPrefix& prefix, std::uint64_t n);

enum class DensitySide {
  upper,  // C(n)/(n+1) <= q + 1/k   <=>  s*k*C(n) <= (p*k + s)(n+1)
  lower,  // C(n)/(n+1) >= q - 1/k   <=>  s*k*C(n) >= (p*k - s)(n+1)
};

struct DensityCheck {
  bool holds = true;
  std::optional<std::uint64_t> first_violation;
};

/// Evaluates the integer form of the density inequality for every n in
/// [from, to], with q = q_num / q_den. Intermediate products are 128-bit
/// and overflow-checked.
DensityCheck density_inequality_check(const UlamPrefix& prefix, std::int64_t q_num,
                                      std::uint64_t q_den, std::uint64_t k, std::uint64_t from,
                                      std::uint64_t to, DensitySide side = DensitySide::upper);
DensityCheck density_inequality_check(const UlamParams& params, std::int64_t q_num,
                                      std::uint64_t q_den, std::uint64_t k, std::uint64_t from,
                                      std::uint64_t to, DensitySide side = DensitySide::upper,
                                      Limits limits = default_limits());

/// Evidence about a residue class in a prefix. Never a verdict: whether a
/// class is eventually avoided cannot be decided from finitely many terms.
struct ResidueCensus {
  std::uint64_t modulus = 2;
  std::uint64_t residue = 0;
  std::uint64_t count = 0;
  std::optional<std::uint64_t> largest;
  /// Successor of the largest class member (0 when there is none), reported
  /// only if no member lies in the upper half (horizon/2, horizon].
  std::optional<std::uint64_t> free_tail_from;
};

ResidueCensus residue_census(const UlamPrefix& prefix, std::uint64_t modulus,
                             std::uint64_t residue);
ResidueCensus evens_census(const UlamPrefix& prefix);

enum class Status { verified_on_prefix, refuted_on_prefix, unknown };

const char* to_string(Status s) noexcept;

struct HierarchyReport {
  UlamParams params;
  std::uint64_t horizon = 0;
  Status r1 = Status::unknown;  // strong rigidity
  Status r2 = Status::unknown;  // gap regularity
  Status r3 = Status::unknown;  // bounded gaps
  Status r4 = Status::unknown;  // density exists
  Status r5 = Status::unknown;  // positive lower density

  std::optional<std::string> code_id;
  std::optional<std::uint64_t> rigidity_threshold;
  std::optional<PeriodicityCandidate> candidate;
  std::uint64_t max_gap = 0;
  std::uint64_t max_gap_first_half = 0;
  std::optional<Rational> density;  // p/G when R2 holds on the prefix
  DensityEstimate empirical;
  std::optional<Rational> lower_density_bound;  // 1/B when R3 holds on the prefix
  std::vector<std::string> notes;
};

/// Assembles R1..R5 statuses from the prefix. When `candidate` is absent the
/// gap list is scanned with the default policy. Statuses are reconciled so
/// that a verified condition never sits above a refuted consequence.
HierarchyReport hierarchy_report(const UlamPrefix& prefix, const PatternCode* code,
                                 std::optional<PeriodicityCandidate> candidate,
                                 const CheckOptions& opts = {},
                                 const PeriodPolicy& policy = {});

}  // namespace ulam
