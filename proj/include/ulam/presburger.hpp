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
#include "ulam/pattern.hpp"
#include "ulam/rational.hpp"
#include "ulam/regularity.hpp"

namespace ulam {

struct Progression {
  std::uint64_t first = 0;
  std::uint64_t diff = 0;

  friend bool operator==(const Progression&, const Progression&) = default;
};

/// A finite exceptional set plus p progressions sharing the difference G.
/// Built from a periodicity candidate, so it is only as good as the
/// candidate: exported artifacts carry a candidate-grade marker.
struct APDecomposition {
  UlamParams params;
  std::uint64_t horizon = 0;  // agreement with U(a,b) checked up to here
  std::vector<std::uint64_t> initial_set;
  std::vector<Progression> progressions;
  PeriodicityCandidate candidate;
};

/// Throws stale_candidate if the candidate does not fit the prefix, or if
/// the progressions predict a member in (last term, horizon].
APDecomposition ap_decomposition(const UlamPrefix& prefix, const PeriodicityCandidate& cand);

bool ap_member(const APDecomposition& decomp, std::uint64_t m);

/// Canonical formula text in the free variable x:
///
///   formula     = "⊥" | disjunct { " ∨ " disjunct }
///   disjunct    = constant | progression
///   constant    = "x = " numeral
///   progression = "∃t (x = " numeral " + " numeral "·t)"
///   numeral     = digit { digit }
///
/// Constants come first in ascending order, then progressions in order of
/// their first term. Numerals abbreviate sums of 1; "k·t" abbreviates t
/// added to itself k times.
std::string to_presburger_text(const APDecomposition& decomp);

/// One masked component per progression (L = G, S = {0}, starting at the
/// first term) and a singleton per exceptional element. Bounded at
/// `horizon` when given, unbounded otherwise.
PatternCode ap_to_pattern_code(const APDecomposition& decomp,
                               std::optional<std::uint64_t> horizon = std::nullopt);

/// p / G in lowest terms.
Rational effective_density(const APDecomposition& decomp);

}  // namespace ulam
