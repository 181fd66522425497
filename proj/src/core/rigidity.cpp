/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ulam/rigidity.hpp"

#include <algorithm>

#include "ulam/checked.hpp"
#include "ulam/parallel.hpp"

namespace ulam {

const char* to_string(MismatchKind kind) noexcept {
  switch (kind) {
    case MismatchKind::in_ulam_not_pattern: return "in-ulam-not-pattern";
    case MismatchKind::in_pattern_not_ulam: return "in-pattern-not-ulam";
  }
  return "unknown";
}

void check_applicable(const PatternCode& code, const UlamParams& params,
                      const CheckOptions& opts) {
  require_coprime(params, opts.allow_non_coprime);
  if (code.applicability && !code.applicability->admits(params.b()) &&
      !opts.override_applicability) {
    throw Error(ErrorCode::applicability,
                "code applies to b = " + std::to_string(code.applicability->residue) + " mod " +
                    std::to_string(code.applicability->modulus) + ", got b = " +
                    std::to_string(params.b()));
  }
}

namespace {

// Walks [first, last] once, calling visit(m, in_ulam, in_code) in order;
// stops early when visit returns false.
template <typename Visit>
void walk(const PatternCode& code, const UlamPrefix& prefix, std::uint64_t first,
          std::uint64_t last, Visit&& visit) {
  if (first > last) return;
  if (last > prefix.horizon()) {
    throw Error(ErrorCode::insufficient_horizon,
                "segment end " + std::to_string(last) + " beyond prefix horizon " +
                    std::to_string(prefix.horizon()));
  }
  const auto a = checked::narrow<std::int64_t>(prefix.params().a());
  const auto b = checked::narrow<std::int64_t>(prefix.params().b());
  auto terms = prefix.terms();
  auto it = std::lower_bound(terms.begin(), terms.end(), first);
  for (std::uint64_t m = first;; ++m) {
    const bool in_ulam = it != terms.end() && *it == m;
    if (in_ulam) ++it;
    const bool in_code = in_pattern(code, a, b, checked::narrow<std::int64_t>(m));
    if (!visit(m, in_ulam, in_code) || m == last) break;
  }
}

}  // namespace

SegmentReport verify_segment(const PatternCode& code, const UlamPrefix& prefix,
                             std::uint64_t first, std::uint64_t last, const CheckOptions& opts) {
  check_applicable(code, prefix.params(), opts);
  SegmentReport report{.params = prefix.params(), .code_id = code_id(code), .first = first,
                       .last = last};
  walk(code, prefix, first, last, [&](std::uint64_t m, bool in_ulam, bool in_code) {
    if (in_ulam == in_code) {
      ++report.matched_count;
    } else if (!report.first_mismatch) {
      report.first_mismatch = Mismatch{m, in_ulam ? MismatchKind::in_ulam_not_pattern
                                                  : MismatchKind::in_pattern_not_ulam};
    }
    return true;
  });
  report.agrees = !report.first_mismatch;
  return report;
}

SegmentReport verify_segment(const PatternCode& code, const UlamParams& params,
                             std::uint64_t first, std::uint64_t last, const CheckOptions& opts) {
  check_applicable(code, params, opts);
  const UlamPrefix prefix = generate_to_horizon(params, std::max(last, params.b()), opts.limits);
  return verify_segment(code, prefix, first, last, opts);
}

std::optional<std::uint64_t> search_threshold(const PatternCode& code, const UlamPrefix& prefix,
                                              std::uint64_t last, const CheckOptions& opts) {
  check_applicable(code, prefix.params(), opts);
  std::optional<std::uint64_t> last_mismatch;
  walk(code, prefix, 0, last, [&](std::uint64_t m, bool in_ulam, bool in_code) {
    if (in_ulam != in_code) last_mismatch = m;
    return true;
  });
  if (!last_mismatch) return 0;
  if (*last_mismatch == last) return std::nullopt;
  return *last_mismatch + 1;
}

std::optional<std::uint64_t> search_threshold(const PatternCode& code, const UlamParams& params,
                                              std::uint64_t last, const CheckOptions& opts) {
  check_applicable(code, params, opts);
  const UlamPrefix prefix = generate_to_horizon(params, std::max(last, params.b()), opts.limits);
  return search_threshold(code, prefix, last, opts);
}

std::vector<SweepEntry> family_sweep(const PatternCode& code, const SweepSpec& spec,
                                     const CheckOptions& opts, unsigned threads) {
  if (spec.modulus == 0 || spec.residue >= spec.modulus) {
    throw Error(ErrorCode::precondition, "sweep needs 0 <= residue < modulus");
  }
  std::vector<std::uint64_t> ns = spec.n_values;
  std::sort(ns.begin(), ns.end());
  std::vector<SweepEntry> out(ns.size());
  detail::parallel_for(out.size(), threads, [&](std::size_t i) {
    SweepEntry& entry = out[i];
    entry.n = ns[i];
    try {
      if (entry.n % spec.modulus != spec.residue && !opts.override_applicability) {
        throw Error(ErrorCode::applicability,
                    "n = " + std::to_string(entry.n) + " is not " +
                        std::to_string(spec.residue) + " mod " + std::to_string(spec.modulus));
      }
      const UlamParams params = UlamParams::validate(spec.a, entry.n);
      const std::int64_t end = checked::add(
          checked::mul(spec.c, checked::narrow<std::int64_t>(entry.n)), spec.d);
      const std::uint64_t last = end < 0 ? 0 : static_cast<std::uint64_t>(end);
      entry.report = verify_segment(code, params, 1, last, opts);
    } catch (const Error& e) {
      entry.error = e.code();
      entry.message = e.what();
    } catch (const std::exception& e) {
      entry.error = ErrorCode::internal;
      entry.message = e.what();
    }
  });
  return out;
}

}  // namespace ulam
