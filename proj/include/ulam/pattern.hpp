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
#include <string_view>
#include <vector>

namespace ulam {

/// A masked interval whose endpoints are linear in (a, b):
///
///   A(a,b) = A1*a + A2*b + p,   B(a,b) = B1*a + B2*b + q,
///   set    = { m in [A, B] : (m - A) mod L in S }.
///
/// With `unbounded` set the upper endpoint is ignored and the set runs on
/// forever. A > B is a legal, empty interval.
struct PatternComponent {
  std::int64_t A1 = 0;
  std::int64_t A2 = 0;
  std::int64_t B1 = 0;
  std::int64_t B2 = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::uint64_t L = 1;
  std::vector<std::uint64_t> S{0};  // ascending, each element < L
  bool unbounded = false;

  friend bool operator==(const PatternComponent&, const PatternComponent&) = default;
};

/// Residue class of b for which a code is claimed to describe U(a,b).
struct Applicability {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;

  bool admits(std::uint64_t b) const noexcept { return b % modulus == residue; }

  friend bool operator==(const Applicability&, const Applicability&) = default;
};

struct PatternCode {
  std::vector<PatternComponent> components;
  std::optional<Applicability> applicability;

  friend bool operator==(const PatternCode&, const PatternCode&) = default;
};

/// Throws malformed_code unless L >= 1, S is strictly ascending and every
/// element of S is below L; applicability needs residue < modulus.
void validate(const PatternComponent& comp);
void validate(const PatternCode& code);

struct Endpoints {
  std::int64_t A = 0;
  std::optional<std::int64_t> B;  // absent for unbounded components
};

Endpoints eval_endpoints(const PatternComponent& comp, std::int64_t a, std::int64_t b);

bool in_component(const PatternComponent& comp, std::int64_t a, std::int64_t b, std::int64_t m);
bool in_pattern(const PatternCode& code, std::int64_t a, std::int64_t b, std::int64_t m);

/// Sorted, duplicate-free enumeration. Throws unbounded_pattern if any
/// component is unbounded.
std::vector<std::int64_t> pattern_set(const PatternCode& code, std::int64_t a, std::int64_t b);

struct BMax {
  std::optional<std::int64_t> value;  // max B over bounded components
  bool has_unbounded = false;
};

BMax b_max(const PatternCode& code, std::int64_t a, std::int64_t b);

/// Canonical JSON text (sorted keys, no whitespace).
std::string encode(const PatternCode& code);

/// Throws ParseError (with byte offset) on malformed JSON and
/// malformed_code on semantic violations.
PatternCode decode(std::string_view text);

/// Short stable identifier derived from the canonical encoding.
std::string code_id(const PatternCode& code);

}  // namespace ulam
