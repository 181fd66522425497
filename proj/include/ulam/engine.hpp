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
#include <vector>

namespace ulam {

/// Starting pair of U(a,b). Non-coprime pairs are accepted and flagged;
/// analyses downstream refuse them unless explicitly overridden.
class UlamParams {
 public:
  /// Throws invalid_parameters unless 1 <= a < b.
  static UlamParams validate(std::uint64_t a, std::uint64_t b);

  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  bool coprime() const noexcept { return coprime_; }

  friend bool operator==(const UlamParams&, const UlamParams&) = default;

 private:
  UlamParams(std::uint64_t a, std::uint64_t b, bool coprime)
      : a_(a), b_(b), coprime_(coprime) {}

  std::uint64_t a_;
  std::uint64_t b_;
  bool coprime_;
};

/// Throws non_coprime for flagged params unless `allow` is set.
void require_coprime(const UlamParams& params, bool allow);

/// Ceiling on horizons the sieve will allocate. One byte of counter storage
/// per integer below the horizon.
struct Limits {
  std::uint64_t max_horizon = std::uint64_t{1} << 30;
};

Limits& default_limits() noexcept;

/// Verified initial segment of U(a,b): every m <= horizon is decided, and
/// terms lists exactly the members up to horizon. Immutable once built.
class UlamPrefix {
 public:
  /// Assembles a prefix from stored parts, checking structural invariants
  /// only (first two terms, strict increase, last term <= horizon). Used by
  /// the cache reader; the Ulam property itself is not re-verified.
  static UlamPrefix from_parts(UlamParams params, std::vector<std::uint64_t> terms,
                               std::uint64_t horizon);

  const UlamParams& params() const noexcept { return params_; }
  std::span<const std::uint64_t> terms() const noexcept { return terms_; }
  std::uint64_t horizon() const noexcept { return horizon_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool contains(std::uint64_t m) const;

  /// |terms ∩ [0, n]|; requires n <= horizon.
  std::uint64_t count_upto(std::uint64_t n) const;

  /// The prefix that direct generation to `horizon` would produce.
  UlamPrefix restrict_to(std::uint64_t horizon) const;

  friend bool operator==(const UlamPrefix&, const UlamPrefix&) = default;

 private:
  friend class Sieve;
  UlamPrefix(UlamParams params, std::vector<std::uint64_t> terms, std::uint64_t horizon)
      : params_(params), terms_(std::move(terms)), horizon_(horizon) {}

  UlamParams params_;
  std::vector<std::uint64_t> terms_;
  std::uint64_t horizon_;
};

/// Incremental representation-count sieve. Counters saturate at 2 since
/// admission only needs to tell 0, 1 and "two or more" apart. When a term u
/// is admitted, u+v is bumped for every earlier term v within the current
/// allocation; growing the allocation replays the pairs whose sums land in
/// the newly covered range, so each pair is counted exactly once.
class Sieve {
 public:
  explicit Sieve(UlamParams params, Limits limits = default_limits());

  /// Resumes from a finished prefix; only pairs with sums above its
  /// horizon are replayed.
  explicit Sieve(const UlamPrefix& prefix, Limits limits = default_limits());

  /// Decides every m <= horizon.
  void advance_to(std::uint64_t horizon);

  /// Decides integers until at least k terms are known, growing the
  /// allocation geometrically. The decided horizon stops at the k-th term.
  void advance_to_count(std::uint64_t k);

  std::uint64_t decided() const noexcept { return decided_; }
  std::span<const std::uint64_t> terms() const noexcept { return terms_; }

  UlamPrefix snapshot() const;

 private:
  void reserve(std::uint64_t capacity);
  void admit(std::uint64_t term);
  bool step();

  UlamParams params_;
  Limits limits_;
  std::vector<std::uint64_t> terms_;
  std::vector<std::uint8_t> counts_;  // index m, valid for m <= capacity_
  std::uint64_t capacity_ = 0;
  std::uint64_t decided_ = 0;
};

enum class RepClass : std::uint8_t { zero = 0, one = 1, many = 2 };

/// Representation table r(m) for m <= horizon over the terms of a prefix.
/// The saturating class table is always filled; exact counts are opt-in.
struct RepTable {
  std::uint64_t horizon = 0;
  std::vector<RepClass> class_of;
  std::optional<std::vector<std::uint32_t>> exact_of;
};

RepTable build_rep_table(const UlamPrefix& prefix, bool with_exact);

UlamPrefix generate_to_horizon(const UlamParams& params, std::uint64_t horizon,
                               Limits limits = default_limits());
UlamPrefix generate_count(const UlamParams& params, std::uint64_t k,
                          Limits limits = default_limits());
UlamPrefix extend(const UlamPrefix& prefix, std::uint64_t horizon,
                  Limits limits = default_limits());

bool is_member(const UlamParams& params, std::uint64_t m, Limits limits = default_limits());
std::uint64_t nth_term(const UlamParams& params, std::uint64_t k,
                       Limits limits = default_limits());
std::uint64_t count_upto(const UlamParams& params, std::uint64_t n,
                         Limits limits = default_limits());

/// Number of unordered pairs x < y of prefix terms with x + y = n.
std::uint64_t rep_count_exact(const UlamPrefix& prefix, std::uint64_t n);

}  // namespace ulam
