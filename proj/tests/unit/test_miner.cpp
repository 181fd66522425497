/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ulam/error.hpp"
#include "ulam/miner.hpp"

using namespace ulam;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

bool has_component(const PatternCode& code, const PatternComponent& want) {
  for (const auto& c : code.components) {
    if (c == want) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("miner") {
  TEST_CASE("maximal runs") {
    const std::vector<std::uint64_t> set{1, 2, 3, 5, 7, 8, 20};
    const auto d = runs(set, 9);
    CHECK(d.n == 9);
    CHECK(d.runs == std::vector<Run>{{1, 3}, {5, 5}, {7, 8}, {20, 20}});
    CHECK(runs(std::vector<std::uint64_t>{}).runs.empty());
  }

  TEST_CASE("exact line fit on synthetic samples") {
    std::vector<RunDecomposition> samples;
    for (std::uint64_t n : {6, 8, 10, 12}) {
      samples.push_back({n, {{1, 1}, {n, 2 * n}, {3 * n + 1, 3 * n + 4}}});
    }
    const auto fit = fit_components(samples, 2, 0);
    CHECK(fit.misaligned.empty());
    REQUIRE(fit.components.size() == 3);
    CHECK(fit.components[1].slope_lo == 1);
    CHECK(fit.components[1].intercept_lo == 0);
    CHECK(fit.components[1].slope_hi == 2);
    CHECK(fit.components[2].slope_lo == 3);
    CHECK(fit.components[2].intercept_lo == 1);
    CHECK(fit.components[2].intercept_hi == 4);
    CHECK(fit.components[0].verified_on.size() == 4);
  }

  TEST_CASE("nonlinear endpoints are reported as misfits") {
    std::vector<RunDecomposition> samples;
    for (std::uint64_t n : {2, 3, 4, 5}) samples.push_back({n, {{n * n, n * n + 1}}});
    const auto fit = fit_components(samples, 1, 0);
    CHECK(fit.components.empty());
    REQUIRE(fit.misaligned.size() == 1);
    CHECK(fit.misaligned[0].run_index == 0);
  }

  TEST_CASE("preconditions and alignment") {
    std::vector<RunDecomposition> two{{4, {{1, 1}}}, {6, {{1, 1}}}};
    CHECK(code_of([&] { fit_components(two, 2, 0); }) == ErrorCode::precondition);
    std::vector<RunDecomposition> off{{4, {{1, 1}}}, {6, {{1, 1}}}, {7, {{1, 1}}}};
    CHECK(code_of([&] { fit_components(off, 2, 0); }) == ErrorCode::precondition);
    std::vector<RunDecomposition> ragged{{4, {{1, 1}}}, {6, {{1, 1}, {3, 4}}}, {8, {{1, 1}}}};
    CHECK(code_of([&] { fit_components(ragged, 2, 0); }) == ErrorCode::alignment_failure);
  }

  TEST_CASE("mining U(1,n) recovers the [4n+2, 5n-1] component") {
    const PatternComponent target{.A1 = 0, .A2 = 4, .B1 = 0, .B2 = 5, .p = 2, .q = -1};
    for (std::uint64_t residue : {0, 1}) {
      MineSpec spec{.modulus = 2, .residue = residue, .train = {}, .holdout = {}, .c = 5, .d = -1};
      for (std::uint64_t n = 8 + residue; n <= 30; n += 2) spec.train.push_back(n);
      for (std::uint64_t n = 40 + residue; n <= 60; n += 4) spec.holdout.push_back(n);
      const auto res = mine(spec, {}, 4);
      CHECK(res.fit.misaligned.empty());
      CHECK(has_component(res.code, target));
      REQUIRE(res.code.applicability.has_value());
      CHECK(res.code.applicability->modulus == 2);
      CHECK(res.code.applicability->residue == residue);
      REQUIRE(res.verification.size() == spec.holdout.size());
      for (const auto& e : res.verification) {
        REQUIRE(e.report.has_value());
        CHECK(e.report->agrees);
      }
    }
  }

  TEST_CASE("segment runs match the sieve") {
    const auto d = segment_runs(10, 5, -1);
    CHECK(d.n == 10);
    CHECK(d.runs.front() == Run{1, 1});
    CHECK(d.runs.back() == Run{42, 49});
    CHECK(code_of([] { segment_runs(1, 5, -1); }) == ErrorCode::invalid_parameters);
  }
}
