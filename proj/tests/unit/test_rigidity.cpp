/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "naive_ulam.hpp"
#include "ulam/error.hpp"
#include "ulam/rigidity.hpp"

using namespace ulam;

namespace {

PatternCode example_code(std::optional<Applicability> app = std::nullopt) {
  return PatternCode{{PatternComponent{.A1 = 0, .A2 = 4, .B1 = 0, .B2 = 5, .p = 2, .q = -1}}, app};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_SUITE("rigidity") {
  TEST_CASE("interval [4n+2, 5n-1] inside U(1,n)") {
    const auto code = example_code();
    for (std::uint64_t n = 4; n <= 60; ++n) {
      const auto rep = verify_segment(code, UlamParams::validate(1, n), 4 * n + 2, 5 * n - 1);
      INFO("n=" << n);
      CHECK(rep.agrees);
      CHECK(rep.matched_count == n - 2);
    }
  }

  TEST_CASE("segment report against a brute-force comparison") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const std::uint64_t a = 1 + rng() % 4;
      const std::uint64_t b = a + 1 + rng() % 10;
      const PatternCode code{{PatternComponent{.A1 = 1, .A2 = 1, .B1 = 0, .B2 = 3,
                                               .p = static_cast<std::int64_t>(rng() % 10),
                                               .q = static_cast<std::int64_t>(rng() % 40),
                                               .L = 1 + rng() % 3}},
                             std::nullopt};
      const UlamParams params = UlamParams::validate(a, b);
      CheckOptions opts;
      opts.allow_non_coprime = true;
      const std::uint64_t first = rng() % 30;
      const std::uint64_t last = first + rng() % 80;
      const auto terms = oracle::naive_ulam(a, b, std::max(last, b));
      std::uint64_t matched = 0;
      std::optional<std::uint64_t> first_bad;
      std::optional<std::uint64_t> last_bad;
      for (std::uint64_t m = first; m <= last; ++m) {
        const bool u = std::binary_search(terms.begin(), terms.end(), m);
        const bool c = in_pattern(code, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                  static_cast<std::int64_t>(m));
        if (u == c) {
          ++matched;
        } else if (!first_bad) {
          first_bad = m;
        }
      }
      for (std::uint64_t m = 0; m <= last; ++m) {
        const bool u = std::binary_search(terms.begin(), terms.end(), m);
        const bool c = in_pattern(code, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                  static_cast<std::int64_t>(m));
        if (u != c) last_bad = m;
      }
      const auto rep = verify_segment(code, params, first, last, opts);
      CHECK(rep.matched_count == matched);
      CHECK(rep.agrees == !first_bad.has_value());
      if (first_bad) {
        REQUIRE(rep.first_mismatch.has_value());
        CHECK(rep.first_mismatch->m == *first_bad);
        const bool in_u = std::binary_search(terms.begin(), terms.end(), *first_bad);
        CHECK((rep.first_mismatch->kind == MismatchKind::in_ulam_not_pattern) == in_u);
      }
      const auto thr = search_threshold(code, params, last, opts);
      if (!last_bad) {
        CHECK(thr == std::optional<std::uint64_t>{0});
      } else if (*last_bad == last) {
        CHECK_FALSE(thr.has_value());
      } else {
        CHECK(thr == std::optional<std::uint64_t>{*last_bad + 1});
        CHECK(verify_segment(code, params, *thr, last, opts).agrees);
      }
    }
  }

  TEST_CASE("applicability and coprimality gates") {
    const auto code = example_code(Applicability{2, 0});
    CHECK(code_of([&] { verify_segment(code, UlamParams::validate(1, 9), 38, 44); }) ==
          ErrorCode::applicability);
    CheckOptions over;
    over.override_applicability = true;
    CHECK(verify_segment(code, UlamParams::validate(1, 9), 38, 44, over).agrees);
    CHECK(verify_segment(code, UlamParams::validate(1, 10), 42, 49).agrees);
    CHECK(code_of([&] { verify_segment(example_code(), UlamParams::validate(2, 6), 26, 29); }) ==
          ErrorCode::non_coprime);
    const auto prefix = generate_to_horizon(UlamParams::validate(1, 10), 30);
    CHECK(code_of([&] { verify_segment(example_code(), prefix, 1, 49); }) ==
          ErrorCode::insufficient_horizon);
  }

  TEST_CASE("family sweep is ordered and thread-count independent") {
    const auto code = example_code();
    SweepSpec spec{.a = 1, .modulus = 1, .residue = 0, .n_values = {}, .c = 5, .d = -1};
    for (std::uint64_t n = 40; n >= 4; --n) spec.n_values.push_back(n);
    const auto one = family_sweep(code, spec, {}, 1);
    const auto many = family_sweep(code, spec, {}, 6);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].n == 4 + i);
      CHECK(many[i].n == one[i].n);
      REQUIRE(one[i].report.has_value());
      REQUIRE(many[i].report.has_value());
      CHECK(one[i].report->agrees == many[i].report->agrees);
      CHECK(one[i].report->first_mismatch == many[i].report->first_mismatch);
      // [1, 5n-1] includes the sparse start, which the single interval misses.
      CHECK_FALSE(one[i].report->agrees);
    }
  }

  TEST_CASE("sweep records per-entry errors") {
    SweepSpec spec{.a = 1, .modulus = 2, .residue = 0, .n_values = {1, 6, 7}, .c = 1, .d = 0};
    const auto out = family_sweep(example_code(), spec, {}, 2);
    REQUIRE(out.size() == 3);
    CHECK(out[0].error == ErrorCode::applicability);
    CHECK(out[1].report.has_value());
    CHECK(out[2].error == ErrorCode::applicability);
    spec.n_values = {1};
    spec.residue = 1;
    const auto bad = family_sweep(example_code(), spec, {}, 1);
    CHECK(bad[0].error == ErrorCode::invalid_parameters);
    spec.residue = 2;
    CHECK(code_of([&] { family_sweep(example_code(), spec); }) == ErrorCode::precondition);
  }
}
