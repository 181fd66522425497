/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ulam/engine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ulam/checked.hpp"
#include "ulam/error.hpp"

namespace ulam {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_parameters: return "invalid-parameters";
    case ErrorCode::horizon_too_large: return "horizon-too-large";
    case ErrorCode::precondition: return "precondition-violation";
    case ErrorCode::insufficient_horizon: return "insufficient-horizon";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::malformed_code: return "malformed-code";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::unbounded_pattern: return "unbounded-pattern";
    case ErrorCode::applicability: return "applicability-violation";
    case ErrorCode::non_coprime: return "non-coprime-parameters";
    case ErrorCode::stale_candidate: return "stale-candidate";
    case ErrorCode::alignment_failure: return "alignment-failure";
    case ErrorCode::fit_failure: return "fit-failure";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::corrupt_cache: return "corrupt-cache";
    case ErrorCode::version_mismatch: return "version-mismatch";
    case ErrorCode::internal: return "internal-error";
  }
  return "unknown-error";
}

UlamParams UlamParams::validate(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || a >= b) {
    throw Error(ErrorCode::invalid_parameters,
                "need 1 <= a < b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  return UlamParams(a, b, std::gcd(a, b) == 1);
}

void require_coprime(const UlamParams& params, bool allow) {
  if (!params.coprime() && !allow) {
    throw Error(ErrorCode::non_coprime,
                "parameters (" + std::to_string(params.a()) + "," + std::to_string(params.b()) +
                    ") are not coprime; pass the non-coprime override to analyse them");
  }
}

Limits& default_limits() noexcept {
  static Limits limits;
  return limits;
}

// ---------------------------------------------------------------------------

UlamPrefix UlamPrefix::from_parts(UlamParams params, std::vector<std::uint64_t> terms,
                                  std::uint64_t horizon) {
  if (terms.size() < 2 || terms[0] != params.a() || terms[1] != params.b()) {
    throw Error(ErrorCode::precondition, "prefix must start with a, b");
  }
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] <= terms[i - 1]) {
      throw Error(ErrorCode::precondition, "prefix terms must be strictly increasing");
    }
  }
  if (terms.back() > horizon) {
    throw Error(ErrorCode::precondition, "prefix term beyond its horizon");
  }
  return UlamPrefix(params, std::move(terms), horizon);
}

bool UlamPrefix::contains(std::uint64_t m) const {
  if (m > horizon_) {
    throw Error(ErrorCode::insufficient_horizon,
                "membership of " + std::to_string(m) + " beyond horizon " +
                    std::to_string(horizon_));
  }
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

std::uint64_t UlamPrefix::count_upto(std::uint64_t n) const {
  if (n > horizon_) {
    throw Error(ErrorCode::insufficient_horizon,
                "count up to " + std::to_string(n) + " beyond horizon " + std::to_string(horizon_));
  }
  return static_cast<std::uint64_t>(std::upper_bound(terms_.begin(), terms_.end(), n) -
                                    terms_.begin());
}

UlamPrefix UlamPrefix::restrict_to(std::uint64_t horizon) const {
  if (horizon > horizon_) {
    throw Error(ErrorCode::insufficient_horizon, "cannot restrict beyond the prefix horizon");
  }
  if (horizon < params_.b()) {
    throw Error(ErrorCode::precondition, "restricted horizon must be >= b");
  }
  auto end = std::upper_bound(terms_.begin(), terms_.end(), horizon);
  return UlamPrefix(params_, std::vector<std::uint64_t>(terms_.begin(), end), horizon);
}

// ---------------------------------------------------------------------------

Sieve::Sieve(UlamParams params, Limits limits) : params_(params), limits_(limits) {
  terms_ = {params.a(), params.b()};
  decided_ = params.b();
  reserve(params.b());
}

Sieve::Sieve(const UlamPrefix& prefix, Limits limits)
    : params_(prefix.params()), limits_(limits) {
  terms_.assign(prefix.terms().begin(), prefix.terms().end());
  decided_ = prefix.horizon();
  // Counters at or below the horizon are never consulted again, so the
  // allocation starts there with nothing replayed yet.
  if (decided_ > limits_.max_horizon) {
    throw HorizonError("prefix horizon exceeds the configured limit", decided_, terms_.size());
  }
  counts_.assign(decided_ + 1, 0);
  capacity_ = decided_;
}

void Sieve::reserve(std::uint64_t capacity) {
  if (capacity <= capacity_ && !counts_.empty()) return;
  if (capacity > limits_.max_horizon) {
    throw HorizonError("horizon " + std::to_string(capacity) + " exceeds limit " +
                           std::to_string(limits_.max_horizon) + " (decided through " +
                           std::to_string(decided_) + ", " + std::to_string(terms_.size()) +
                           " terms found)",
                       decided_, terms_.size());
  }
  const std::uint64_t old = counts_.empty() ? 0 : capacity_;
  counts_.resize(capacity + 1, 0);
  capacity_ = capacity;

  // Replay every pair v < u of known terms whose sum falls in (old, capacity].
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    const std::uint64_t u = terms_[i];
    if (u > capacity) break;
    const std::uint64_t lo = old >= u ? old - u + 1 : 0;  // v >= lo  <=>  u + v > old
    auto first = std::lower_bound(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(i), lo);
    for (auto it = first; it != terms_.begin() + static_cast<std::ptrdiff_t>(i); ++it) {
      const std::uint64_t s = checked::add(u, *it);
      if (s > capacity) break;
      std::uint8_t& c = counts_[s];
      c = static_cast<std::uint8_t>(c + (c < 2));
    }
  }
}

void Sieve::admit(std::uint64_t term) {
  // Pairs (term, v) with sums past the allocation are replayed on growth.
  std::uint8_t* counts = counts_.data();
  const std::uint64_t cap = capacity_;
  const std::uint64_t room = cap - term;  // term <= decided_ <= capacity_
  for (std::uint64_t v : terms_) {
    if (v > room) break;
    std::uint8_t& c = counts[term + v];
    c = static_cast<std::uint8_t>(c + (c < 2));
  }
  terms_.push_back(term);
}

bool Sieve::step() {
  const std::uint64_t m = decided_ + 1;
  const bool member = counts_[m] == 1;
  if (member) admit(m);
  decided_ = m;
  return member;
}

void Sieve::advance_to(std::uint64_t horizon) {
  if (horizon <= decided_) return;
  reserve(horizon);
  while (decided_ < horizon) step();
}

void Sieve::advance_to_count(std::uint64_t k) {
  while (terms_.size() < k) {
    if (decided_ == capacity_) {
      std::uint64_t next = capacity_ < 64 ? 128 : checked::mul<std::uint64_t>(capacity_, 2);
      if (next > limits_.max_horizon && capacity_ < limits_.max_horizon) {
        next = limits_.max_horizon;
      }
      if (next <= capacity_) {
        throw HorizonError("term " + std::to_string(k) + " lies beyond the horizon limit " +
                               std::to_string(limits_.max_horizon) + " (" +
                               std::to_string(terms_.size()) + " terms found)",
                           decided_, terms_.size());
      }
      reserve(next);
    }
    step();
  }
}

UlamPrefix Sieve::snapshot() const {
  return UlamPrefix(params_, terms_, decided_);
}

// ---------------------------------------------------------------------------

UlamPrefix generate_to_horizon(const UlamParams& params, std::uint64_t horizon, Limits limits) {
  if (horizon < params.b()) {
    throw Error(ErrorCode::precondition, "horizon must be >= b");
  }
  Sieve sieve(params, limits);
  sieve.advance_to(horizon);
  return sieve.snapshot();
}

UlamPrefix generate_count(const UlamParams& params, std::uint64_t k, Limits limits) {
  if (k == 0) throw Error(ErrorCode::precondition, "term count must be >= 1");
  Sieve sieve(params, limits);
  sieve.advance_to_count(k);
  return sieve.snapshot();
}

UlamPrefix extend(const UlamPrefix& prefix, std::uint64_t horizon, Limits limits) {
  if (horizon <= prefix.horizon()) {
    throw Error(ErrorCode::precondition, "extension horizon must exceed the current horizon " +
                                             std::to_string(prefix.horizon()));
  }
  Sieve sieve(prefix, limits);
  sieve.advance_to(horizon);
  return sieve.snapshot();
}

bool is_member(const UlamParams& params, std::uint64_t m, Limits limits) {
  if (m == 0) throw Error(ErrorCode::precondition, "membership query needs m >= 1");
  if (m <= params.b()) return m == params.a() || m == params.b();
  // Generating to m settles it: once the sieve has decided past m, no later
  // admission can change the answer.
  Sieve sieve(params, limits);
  sieve.advance_to(m);
  return sieve.terms().back() == m;
}

std::uint64_t nth_term(const UlamParams& params, std::uint64_t k, Limits limits) {
  if (k == 0) throw Error(ErrorCode::precondition, "term index is 1-based");
  if (k == 1) return params.a();
  if (k == 2) return params.b();
  return generate_count(params, k, limits).terms()[k - 1];
}

std::uint64_t count_upto(const UlamParams& params, std::uint64_t n, Limits limits) {
  if (n < params.a()) return 0;
  if (n < params.b()) return 1;
  return generate_to_horizon(params, n, limits).size();
}

std::uint64_t rep_count_exact(const UlamPrefix& prefix, std::uint64_t n) {
  if (n > prefix.horizon()) {
    throw Error(ErrorCode::insufficient_horizon,
                "representation count for " + std::to_string(n) + " needs horizon >= n (have " +
                    std::to_string(prefix.horizon()) + ")");
  }
  auto terms = prefix.terms();
  auto hi_end = std::lower_bound(terms.begin(), terms.end(), n);
  if (hi_end == terms.begin()) return 0;
  std::size_t lo = 0;
  std::size_t hi = static_cast<std::size_t>(hi_end - terms.begin()) - 1;
  std::uint64_t count = 0;
  while (lo < hi) {
    const std::uint64_t s = terms[lo] + terms[hi];
    if (s == n) {
      ++count;
      ++lo;
      --hi;
    } else if (s < n) {
      ++lo;
    } else {
      --hi;
    }
  }
  return count;
}

RepTable build_rep_table(const UlamPrefix& prefix, bool with_exact) {
  RepTable table;
  table.horizon = prefix.horizon();
  table.class_of.assign(table.horizon + 1, RepClass::zero);
  if (with_exact) table.exact_of.emplace(table.horizon + 1, 0);

  auto terms = prefix.terms();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t s = terms[i] + terms[j];
      if (s > table.horizon) break;
      auto& c = table.class_of[s];
      if (c != RepClass::many) c = static_cast<RepClass>(static_cast<std::uint8_t>(c) + 1);
      if (with_exact) ++(*table.exact_of)[s];
    }
  }
  return table;
}

}  // namespace ulam
