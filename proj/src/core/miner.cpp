/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ulam/miner.hpp"

#include <algorithm>

#include "ulam/checked.hpp"
#include "ulam/engine.hpp"
#include "ulam/parallel.hpp"

namespace ulam {

RunDecomposition runs(std::span<const std::uint64_t> set, std::uint64_t n) {
  RunDecomposition out{.n = n};
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0 && set[i] <= set[i - 1]) {
      throw Error(ErrorCode::precondition, "run decomposition needs a strictly increasing set");
    }
    if (!out.runs.empty() && out.runs.back().hi + 1 == set[i]) {
      out.runs.back().hi = set[i];
    } else {
      out.runs.push_back({set[i], set[i]});
    }
  }
  return out;
}

namespace {

struct Line {
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
};

// Exact line through (n0, y0) and (n1, y1); nothing if the slope is not an
// integer.
std::optional<Line> fit_line(std::uint64_t n0, std::uint64_t y0, std::uint64_t n1,
                             std::uint64_t y1) {
  const auto dn = checked::sub(checked::narrow<std::int64_t>(n1), checked::narrow<std::int64_t>(n0));
  const auto dy = checked::sub(checked::narrow<std::int64_t>(y1), checked::narrow<std::int64_t>(y0));
  if (dn == 0 || dy % dn != 0) return std::nullopt;
  const std::int64_t slope = dy / dn;
  const std::int64_t intercept = checked::sub(checked::narrow<std::int64_t>(y0),
                                              checked::mul(slope, checked::narrow<std::int64_t>(n0)));
  return Line{slope, intercept};
}

std::int64_t at(const Line& line, std::uint64_t n) {
  return checked::add(checked::mul(line.slope, checked::narrow<std::int64_t>(n)), line.intercept);
}

}  // namespace

FitResult fit_components(std::span<const RunDecomposition> samples, std::uint64_t modulus,
                         std::uint64_t residue) {
  if (samples.size() < 3) throw Error(ErrorCode::precondition, "fitting needs at least 3 samples");
  if (modulus == 0 || residue >= modulus) {
    throw Error(ErrorCode::precondition, "fitting needs 0 <= residue < modulus");
  }
  for (const auto& s : samples) {
    if (s.n % modulus != residue) {
      throw Error(ErrorCode::precondition, "sample n = " + std::to_string(s.n) +
                                               " is outside the residue class");
    }
  }
  const std::size_t count = samples.front().runs.size();
  if (std::any_of(samples.begin(), samples.end(),
                  [&](const RunDecomposition& s) { return s.runs.size() != count; })) {
    std::string detail;
    for (const auto& s : samples) {
      detail += " n=" + std::to_string(s.n) + ":" + std::to_string(s.runs.size());
    }
    throw Error(ErrorCode::alignment_failure, "run counts differ across samples:" + detail);
  }

  auto [lo_it, hi_it] = std::minmax_element(
      samples.begin(), samples.end(),
      [](const RunDecomposition& l, const RunDecomposition& r) { return l.n < r.n; });
  const RunDecomposition& low = *lo_it;
  const RunDecomposition& high = *hi_it;

  FitResult out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto lo_line = fit_line(low.n, low.runs[i].lo, high.n, high.runs[i].lo);
    const auto hi_line = fit_line(low.n, low.runs[i].hi, high.n, high.runs[i].hi);
    if (!lo_line || !hi_line) {
      out.misaligned.push_back({i, "non-integer slope between n=" + std::to_string(low.n) +
                                       " and n=" + std::to_string(high.n)});
      continue;
    }
    MinedComponent comp{.run_index = i, .slope_lo = lo_line->slope,
                        .intercept_lo = lo_line->intercept, .slope_hi = hi_line->slope,
                        .intercept_hi = hi_line->intercept};
    std::optional<std::uint64_t> broken;
    for (const auto& s : samples) {
      const Run& r = s.runs[i];
      if (at(*lo_line, s.n) != static_cast<std::int64_t>(r.lo) ||
          at(*hi_line, s.n) != static_cast<std::int64_t>(r.hi)) {
        broken = s.n;
        break;
      }
      comp.verified_on.push_back(s.n);
    }
    if (broken) {
      out.misaligned.push_back({i, "fit fails at n=" + std::to_string(*broken)});
    } else {
      std::sort(comp.verified_on.begin(), comp.verified_on.end());
      out.components.push_back(std::move(comp));
    }
  }
  return out;
}

RunDecomposition segment_runs(std::uint64_t n, std::int64_t c, std::int64_t d, Limits limits) {
  const UlamParams params = UlamParams::validate(1, n);
  const std::int64_t end = checked::add(checked::mul(c, checked::narrow<std::int64_t>(n)), d);
  if (end < 1) return RunDecomposition{.n = n};
  const auto last = static_cast<std::uint64_t>(end);
  const UlamPrefix prefix = generate_to_horizon(params, std::max(last, n), limits);
  auto terms = prefix.terms();
  auto stop = std::upper_bound(terms.begin(), terms.end(), last);
  return runs(std::span<const std::uint64_t>(terms.begin(), stop), n);
}

MineResult mine(const MineSpec& spec, const CheckOptions& opts, unsigned threads) {
  if (spec.train.size() < 3) {
    throw Error(ErrorCode::precondition, "mining needs at least 3 training values of n");
  }
  std::vector<RunDecomposition> samples(spec.train.size());
  std::vector<std::optional<Error>> failures(spec.train.size());
  detail::parallel_for(samples.size(), threads, [&](std::size_t i) {
    try {
      samples[i] = segment_runs(spec.train[i], spec.c, spec.d, opts.limits);
    } catch (const Error& e) {
      failures[i] = e;
    }
  });
  for (const auto& f : failures) {
    if (f) throw *f;
  }

  MineResult out;
  out.fit = fit_components(samples, spec.modulus, spec.residue);
  if (!out.fit.misaligned.empty()) {
    std::string detail;
    for (const auto& m : out.fit.misaligned) {
      detail += " [run " + std::to_string(m.run_index) + ": " + m.reason + "]";
    }
    throw Error(ErrorCode::fit_failure, "runs could not be fitted:" + detail);
  }
  for (const MinedComponent& mc : out.fit.components) {
    out.code.components.push_back(PatternComponent{.A1 = 0, .A2 = mc.slope_lo, .B1 = 0,
                                                   .B2 = mc.slope_hi, .p = mc.intercept_lo,
                                                   .q = mc.intercept_hi});
  }
  out.code.applicability = Applicability{spec.modulus, spec.residue};

  SweepSpec sweep{.a = 1, .modulus = spec.modulus, .residue = spec.residue,
                  .n_values = spec.holdout, .c = spec.c, .d = spec.d};
  out.verification = family_sweep(out.code, sweep, opts, threads);
  return out;
}

}  // namespace ulam
