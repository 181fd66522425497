/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ulam/regularity.hpp"

#include <algorithm>
#include <numeric>

#include "ulam/checked.hpp"

namespace ulam {

std::vector<std::uint64_t> gaps(const UlamPrefix& prefix) {
  auto terms = prefix.terms();
  if (terms.size() < 2) throw Error(ErrorCode::precondition, "gaps need at least two terms");
  std::vector<std::uint64_t> out(terms.size() - 1);
  for (std::size_t k = 0; k + 1 < terms.size(); ++k) out[k] = terms[k + 1] - terms[k];
  return out;
}

std::optional<PeriodicityCandidate> detect_period(std::span<const std::uint64_t> g,
                                                  const PeriodPolicy& policy) {
  if (policy.min_periods < 2) throw Error(ErrorCode::precondition, "min_periods must be >= 2");
  if (policy.min_coverage <= Rational(0, 1) || policy.min_coverage > Rational(1, 1)) {
    throw Error(ErrorCode::precondition, "min_coverage must lie in (0, 1]");
  }
  const std::size_t K = g.size();
  if (K == 0) return std::nullopt;

  for (std::size_t p = 1; p * policy.min_periods <= K; ++p) {
    // Earliest N with g[k+p] == g[k] for all N <= k < K - p, scanning back.
    std::size_t N = K - p;
    while (N > 0 && g[N - 1] == g[N - 1 + p]) --N;
    const std::size_t tail = K - N;
    if (tail < policy.min_periods * p) continue;
    const Rational coverage(static_cast<std::int64_t>(tail), static_cast<std::int64_t>(K));
    if (coverage < policy.min_coverage) continue;

    PeriodicityCandidate cand;
    cand.threshold = N;
    cand.period = p;
    cand.period_gaps.assign(g.begin() + static_cast<std::ptrdiff_t>(N),
                            g.begin() + static_cast<std::ptrdiff_t>(N + p));
    cand.period_sum = 0;
    for (std::uint64_t x : cand.period_gaps) cand.period_sum = checked::add(cand.period_sum, x);
    cand.periods_observed = tail / p;
    cand.coverage = coverage;
    return cand;
  }
  return std::nullopt;
}

void check_candidate(const PeriodicityCandidate& cand, std::span<const std::uint64_t> g) {
  const std::size_t K = g.size();
  const auto N = static_cast<std::size_t>(cand.threshold);
  const auto p = static_cast<std::size_t>(cand.period);
  if (p == 0 || cand.period_gaps.size() != p || N + p > K) {
    throw Error(ErrorCode::stale_candidate, "candidate does not fit the gap list");
  }
  if (!std::equal(cand.period_gaps.begin(), cand.period_gaps.end(),
                  g.begin() + static_cast<std::ptrdiff_t>(N))) {
    throw Error(ErrorCode::stale_candidate, "candidate period gaps differ from the prefix");
  }
  const std::uint64_t sum =
      std::accumulate(cand.period_gaps.begin(), cand.period_gaps.end(), std::uint64_t{0});
  if (sum != cand.period_sum) {
    throw Error(ErrorCode::stale_candidate, "candidate period sum is inconsistent");
  }
  for (std::size_t k = N; k + p < K; ++k) {
    if (g[k + p] != g[k]) {
      throw Error(ErrorCode::stale_candidate,
                  "period breaks at gap index " + std::to_string(k + p));
    }
  }
}

Rational density_from_period(const PeriodicityCandidate& cand) {
  if (cand.period_sum == 0) throw Error(ErrorCode::precondition, "candidate has zero period sum");
  return Rational(checked::narrow<std::int64_t>(cand.period),
                  checked::narrow<std::int64_t>(cand.period_sum));
}

// ---------------------------------------------------------------------------

DensityEstimate empirical_density(const UlamPrefix& prefix, std::uint64_t n) {
  DensityEstimate est;
  est.n = n;
  est.count = prefix.count_upto(n);
  est.ratio = Rational(checked::narrow<std::int64_t>(est.count),
                       checked::add(checked::narrow<std::int64_t>(n), std::int64_t{1}));
  return est;
}

DensityEstimate empirical_density(const UlamParams& params, std::uint64_t n, Limits limits) {
  DensityEstimate est;
  est.n = n;
  est.count = count_upto(params, n, limits);
  est.ratio = Rational(checked::narrow<std::int64_t>(est.count),
                       checked::add(checked::narrow<std::int64_t>(n), std::int64_t{1}));
  return est;
}

DensityCheck density_inequality_check(const UlamPrefix& prefix, std::int64_t q_num,
                                      std::uint64_t q_den, std::uint64_t k, std::uint64_t from,
                                      std::uint64_t to, DensitySide side) {
  using i128 = __int128;
  if (q_den == 0 || k == 0) {
    throw Error(ErrorCode::precondition, "density check needs q_den >= 1 and k >= 1");
  }
  if (to > prefix.horizon()) {
    throw Error(ErrorCode::insufficient_horizon, "density check range exceeds the prefix horizon");
  }
  const i128 s = static_cast<i128>(q_den);
  const i128 kk = static_cast<i128>(k);
  const i128 pk = checked::mul<i128>(static_cast<i128>(q_num), kk);
  const i128 slack = side == DensitySide::upper ? checked::add(pk, s) : checked::sub(pk, s);
  const i128 sk = checked::mul(s, kk);

  DensityCheck out;
  auto terms = prefix.terms();
  auto it = std::upper_bound(terms.begin(), terms.end(), from);
  std::uint64_t count = static_cast<std::uint64_t>(it - terms.begin());
  for (std::uint64_t n = from;; ++n) {
    if (n > from && it != terms.end() && *it == n) {
      ++count;
      ++it;
    }
    const i128 lhs = checked::mul(sk, static_cast<i128>(count));
    const i128 rhs = checked::mul(slack, static_cast<i128>(n) + 1);
    const bool ok = side == DensitySide::upper ? lhs <= rhs : lhs >= rhs;
    if (!ok) {
      out.holds = false;
      out.first_violation = n;
      return out;
    }
    if (n == to) break;
  }
  return out;
}

DensityCheck density_inequality_check(const UlamParams& params, std::int64_t q_num,
                                      std::uint64_t q_den, std::uint64_t k, std::uint64_t from,
                                      std::uint64_t to, DensitySide side, Limits limits) {
  if (from > to) return {};
  const UlamPrefix prefix = generate_to_horizon(params, std::max(to, params.b()), limits);
  return density_inequality_check(prefix, q_num, q_den, k, from, to, side);
}

// ---------------------------------------------------------------------------

ResidueCensus residue_census(const UlamPrefix& prefix, std::uint64_t modulus,
                             std::uint64_t residue) {
  if (modulus == 0 || residue >= modulus) {
    throw Error(ErrorCode::precondition, "census needs 0 <= residue < modulus");
  }
  ResidueCensus out;
  out.modulus = modulus;
  out.residue = residue;
  for (std::uint64_t t : prefix.terms()) {
    if (t % modulus != residue) continue;
    ++out.count;
    out.largest = t;
  }
  const std::uint64_t half = prefix.horizon() / 2;
  if (!out.largest) {
    out.free_tail_from = 0;
  } else if (*out.largest <= half) {
    out.free_tail_from = *out.largest + 1;
  }
  return out;
}

ResidueCensus evens_census(const UlamPrefix& prefix) { return residue_census(prefix, 2, 0); }

// ---------------------------------------------------------------------------

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::verified_on_prefix: return "verified-on-prefix";
    case Status::refuted_on_prefix: return "refuted-on-prefix";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

void soften(Status& consequent, Status antecedent, const char* what,
            std::vector<std::string>& notes) {
  if (antecedent == Status::verified_on_prefix && consequent == Status::refuted_on_prefix) {
    consequent = Status::unknown;
    notes.push_back(std::string("conflict: ") + what + "; consequent reset to unknown");
  }
}

}  // namespace

HierarchyReport hierarchy_report(const UlamPrefix& prefix, const PatternCode* code,
                                 std::optional<PeriodicityCandidate> candidate,
                                 const CheckOptions& opts, const PeriodPolicy& policy) {
  require_coprime(prefix.params(), opts.allow_non_coprime);
  HierarchyReport rep{.params = prefix.params(), .horizon = prefix.horizon()};
  const std::vector<std::uint64_t> g = gaps(prefix);
  const std::uint64_t H = prefix.horizon();

  // R1: strong rigidity against the supplied code, on the prefix only.
  if (code) {
    rep.code_id = code_id(*code);
    rep.rigidity_threshold = search_threshold(*code, prefix, H, opts);
    if (!rep.rigidity_threshold) {
      rep.r1 = Status::refuted_on_prefix;
      rep.notes.push_back("R1: code disagrees with the prefix at the horizon");
    } else if (*rep.rigidity_threshold <= H / 2) {
      rep.r1 = Status::verified_on_prefix;
    } else {
      rep.notes.push_back("R1: agreeing tail shorter than half the prefix");
    }
  }

  // R2: gap regularity.
  if (candidate) {
    try {
      check_candidate(*candidate, g);
      rep.candidate = candidate;
      rep.r2 = Status::verified_on_prefix;
    } catch (const Error& e) {
      rep.r2 = Status::refuted_on_prefix;
      rep.notes.push_back(std::string("R2: supplied candidate is stale: ") + e.what());
    }
  } else {
    rep.candidate = detect_period(g, policy);
    if (rep.candidate) rep.r2 = Status::verified_on_prefix;
  }

  // R3: bounded gaps, judged by whether the maximum has stabilised.
  for (std::size_t k = 0; k < g.size(); ++k) {
    rep.max_gap = std::max(rep.max_gap, g[k]);
    if (prefix.terms()[k + 1] <= H / 2) rep.max_gap_first_half = rep.max_gap;
  }
  if (rep.r2 == Status::verified_on_prefix || rep.max_gap == rep.max_gap_first_half) {
    rep.r3 = Status::verified_on_prefix;
  } else {
    rep.notes.push_back("R3: maximum gap still growing in the upper half of the prefix");
  }

  // R4: density exists; only a periodic tail gives it.
  rep.empirical = empirical_density(prefix, H);
  if (rep.r2 == Status::verified_on_prefix) {
    rep.density = density_from_period(*rep.candidate);
    rep.r4 = Status::verified_on_prefix;
  }

  // R5: with gaps bounded by B, u_{k+1} <= a + kB, so B*C(n) > n - a for
  // a <= n <= horizon. The stretch after the last term counts as an open gap.
  if (rep.r3 == Status::verified_on_prefix) {
    const std::uint64_t bound = std::max(rep.max_gap, H - prefix.terms().back());
    const std::uint64_t a = prefix.params().a();
    bool ok = bound > 0;
    auto terms = prefix.terms();
    std::size_t count = 0;
    for (std::uint64_t n = a; ok && n <= H; ++n) {
      while (count < terms.size() && terms[count] <= n) ++count;
      const unsigned __int128 lhs = static_cast<unsigned __int128>(bound) * count;
      ok = lhs > n - a;
    }
    if (ok) {
      rep.r5 = Status::verified_on_prefix;
      rep.lower_density_bound = Rational(1, checked::narrow<std::int64_t>(bound));
    } else {
      rep.r5 = Status::refuted_on_prefix;
    }
  }

  soften(rep.r2, rep.r1, "R1 verified but R2 refuted", rep.notes);
  soften(rep.r3, rep.r2, "R2 verified but R3 refuted", rep.notes);
  soften(rep.r4, rep.r2, "R2 verified but R4 refuted", rep.notes);
  soften(rep.r5, rep.r3, "R3 verified but R5 refuted", rep.notes);
  return rep;
}

}  // namespace ulam
