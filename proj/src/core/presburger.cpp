/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ulam/presburger.hpp"

#include <algorithm>

#include "ulam/checked.hpp"

namespace ulam {

APDecomposition ap_decomposition(const UlamPrefix& prefix, const PeriodicityCandidate& cand) {
  const std::vector<std::uint64_t> g = gaps(prefix);
  check_candidate(cand, g);

  auto terms = prefix.terms();
  const auto N = static_cast<std::size_t>(cand.threshold);
  const auto p = static_cast<std::size_t>(cand.period);

  APDecomposition out{.params = prefix.params(), .horizon = prefix.horizon(),
                      .candidate = cand};
  out.initial_set.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(N));
  // u_N + sum_{j<r} g_{N+j} is just u_{N+r}.
  for (std::size_t r = 0; r < p; ++r) {
    out.progressions.push_back({terms[N + r], cand.period_sum});
  }

  // The gap check covers the computed terms; the stretch between the last
  // term and the horizon must not contain a predicted member either.
  const std::uint64_t last = terms.back();
  const std::size_t K = g.size();
  const std::uint64_t predicted = checked::add(last, g[N + ((K - N) % p)]);
  if (predicted <= prefix.horizon()) {
    throw Error(ErrorCode::stale_candidate,
                "progressions predict " + std::to_string(predicted) +
                    ", which the prefix excludes (horizon " + std::to_string(prefix.horizon()) +
                    ")");
  }
  return out;
}

bool ap_member(const APDecomposition& decomp, std::uint64_t m) {
  if (std::binary_search(decomp.initial_set.begin(), decomp.initial_set.end(), m)) return true;
  return std::any_of(decomp.progressions.begin(), decomp.progressions.end(),
                     [m](const Progression& pr) {
                       return m >= pr.first && (m - pr.first) % pr.diff == 0;
                     });
}

std::string to_presburger_text(const APDecomposition& decomp) {
  std::vector<std::string> disjuncts;
  for (std::uint64_t c : decomp.initial_set) disjuncts.push_back("x = " + std::to_string(c));
  std::vector<Progression> progs = decomp.progressions;
  std::sort(progs.begin(), progs.end(),
            [](const Progression& l, const Progression& r) { return l.first < r.first; });
  for (const Progression& pr : progs) {
    disjuncts.push_back("∃t (x = " + std::to_string(pr.first) + " + " + std::to_string(pr.diff) +
                        "·t)");
  }
  if (disjuncts.empty()) return "⊥";
  std::string out = disjuncts.front();
  for (std::size_t i = 1; i < disjuncts.size(); ++i) out += " ∨ " + disjuncts[i];
  return out;
}

PatternCode ap_to_pattern_code(const APDecomposition& decomp,
                               std::optional<std::uint64_t> horizon) {
  PatternCode code;
  const std::int64_t upper = horizon ? checked::narrow<std::int64_t>(*horizon) : 0;
  for (std::uint64_t c : decomp.initial_set) {
    const auto v = checked::narrow<std::int64_t>(c);
    code.components.push_back(PatternComponent{.p = v, .q = v});
  }
  for (const Progression& pr : decomp.progressions) {
    code.components.push_back(PatternComponent{.p = checked::narrow<std::int64_t>(pr.first),
                                               .q = upper,
                                               .L = pr.diff,
                                               .S = {0},
                                               .unbounded = !horizon});
  }
  return code;
}

Rational effective_density(const APDecomposition& decomp) {
  if (decomp.progressions.empty()) return Rational(0, 1);
  return Rational(checked::narrow<std::int64_t>(decomp.progressions.size()),
                  checked::narrow<std::int64_t>(decomp.progressions.front().diff));
}

}  // namespace ulam
