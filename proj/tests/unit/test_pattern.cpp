/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ulam/error.hpp"
#include "ulam/pattern.hpp"

using namespace ulam;

namespace {

PatternComponent interval(std::int64_t A1, std::int64_t A2, std::int64_t B1, std::int64_t B2,
                          std::int64_t p, std::int64_t q) {
  return PatternComponent{.A1 = A1, .A2 = A2, .B1 = B1, .B2 = B2, .p = p, .q = q};
}

PatternCode random_code(std::mt19937_64& rng) {
  PatternCode code;
  const int n = static_cast<int>(rng() % 5);
  auto small = [&] { return static_cast<std::int64_t>(rng() % 41) - 20; };
  for (int i = 0; i < n; ++i) {
    PatternComponent c = interval(small(), small(), small(), small(), small() * 7, small() * 7);
    c.L = 1 + rng() % 9;
    std::set<std::uint64_t> s;
    const int picks = 1 + static_cast<int>(rng() % c.L);
    for (int j = 0; j < picks; ++j) s.insert(rng() % c.L);
    c.S.assign(s.begin(), s.end());
    c.unbounded = rng() % 4 == 0;
    code.components.push_back(c);
  }
  if (rng() % 2) {
    const std::uint64_t mod = 1 + rng() % 6;
    code.applicability = Applicability{mod, rng() % mod};
  }
  return code;
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

TEST_SUITE("pattern") {
  TEST_CASE("linear endpoints") {
    const auto comp = interval(0, 4, 0, 5, 2, -1);
    const Endpoints e = eval_endpoints(comp, 1, 10);
    CHECK(e.A == 42);
    REQUIRE(e.B.has_value());
    CHECK(*e.B == 49);
    CHECK(in_component(comp, 1, 10, 42));
    CHECK(in_component(comp, 1, 10, 49));
    CHECK_FALSE(in_component(comp, 1, 10, 41));
    CHECK_FALSE(in_component(comp, 1, 10, 50));
  }

  TEST_CASE("masked intervals use offsets from the left endpoint") {
    auto comp = interval(1, 0, 1, 0, 9, 30);
    comp.L = 3;
    comp.S = {0, 2};
    // a = 1: interval [10, 31]; offsets 0 and 2 mod 3.
    std::vector<std::int64_t> got;
    for (std::int64_t m = 0; m <= 40; ++m) {
      if (in_component(comp, 1, 0, m)) got.push_back(m);
    }
    CHECK(got == std::vector<std::int64_t>{10, 12, 13, 15, 16, 18, 19, 21, 22, 24, 25, 27, 28, 30,
                                           31});
  }

  TEST_CASE("unbounded components and B_max") {
    PatternCode code;
    code.components.push_back(interval(0, 1, 0, 2, 0, 0));
    code.components.push_back(interval(0, 0, 0, 3, 0, 5));
    BMax bm = b_max(code, 1, 4);
    REQUIRE(bm.value.has_value());
    CHECK(*bm.value == 17);
    CHECK_FALSE(bm.has_unbounded);

    auto tail = interval(0, 6, 0, 0, 0, 0);
    tail.unbounded = true;
    code.components.push_back(tail);
    bm = b_max(code, 1, 4);
    CHECK(bm.has_unbounded);
    CHECK(*bm.value == 17);
    CHECK(in_pattern(code, 1, 4, 1000000));
    CHECK(code_of([&] { pattern_set(code, 1, 4); }) == ErrorCode::unbounded_pattern);
  }

  TEST_CASE("pattern_set equals pointwise membership") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
      PatternCode code = random_code(rng);
      for (auto& c : code.components) c.unbounded = false;
      const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 6);
      const std::int64_t b = a + 1 + static_cast<std::int64_t>(rng() % 8);
      const auto set = pattern_set(code, a, b);
      CHECK(std::is_sorted(set.begin(), set.end()));
      CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
      const BMax bm = b_max(code, a, b);
      const std::int64_t top = bm.value ? std::max<std::int64_t>(*bm.value, 0) : 0;
      std::vector<std::int64_t> brute;
      for (std::int64_t m = 0; m <= top; ++m) {
        if (in_pattern(code, a, b, m)) brute.push_back(m);
      }
      CHECK(set == brute);
      for (std::int64_t m : set) CHECK(m <= top);
    }
  }

  TEST_CASE("validation") {
    auto bad = interval(0, 0, 0, 0, 0, 0);
    bad.L = 0;
    CHECK(code_of([&] { validate(bad); }) == ErrorCode::malformed_code);
    bad.L = 3;
    bad.S = {3};
    CHECK(code_of([&] { validate(bad); }) == ErrorCode::malformed_code);
    bad.S = {2, 1};
    CHECK(code_of([&] { validate(bad); }) == ErrorCode::malformed_code);
    bad.S = {1, 1};
    CHECK(code_of([&] { validate(bad); }) == ErrorCode::malformed_code);
    PatternCode code{{interval(0, 1, 0, 1, 0, 0)}, Applicability{2, 2}};
    CHECK(code_of([&] { validate(code); }) == ErrorCode::malformed_code);
  }

  TEST_CASE("codec is canonical and lossless") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
      const PatternCode code = random_code(rng);
      const std::string text = encode(code);
      const PatternCode back = decode(text);
      CHECK(back == code);
      CHECK(encode(back) == text);
      CHECK(code_id(back) == code_id(code));
    }
    const PatternCode ex{{interval(0, 4, 0, 5, 2, -1)}, Applicability{2, 0}};
    CHECK(encode(ex) ==
          R"({"applicability":{"modulus":2,"residue":0},"components":[{"A1":0,"A2":4,"B1":0,"B2":5,"L":1,"S":[0],"p":2,"q":-1,"unbounded":false}]})");
    CHECK(code_id(ex).size() == 16);
  }

  TEST_CASE("decoder rejects malformed input") {
    try {
      decode(R"({"components": [)");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::parse_error);
      CHECK(e.offset() > 0);
    }
    CHECK(code_of([] { decode(R"([])"); }) == ErrorCode::malformed_code);
    CHECK(code_of([] { decode(R"({"components":[],"extra":1})"); }) == ErrorCode::malformed_code);
    CHECK(code_of([] {
            decode(R"({"components":[{"A1":0,"A2":1,"B1":0,"B2":1,"p":0,"q":0,"L":1,"S":[0]}]})");
          }) == ErrorCode::malformed_code);
    CHECK(code_of([] {
            decode(
                R"({"components":[{"A1":0,"A2":1,"B1":0,"B2":1,"p":0,"q":0,"L":4,"S":[2,1],"unbounded":false}]})");
          }) == ErrorCode::malformed_code);
    CHECK(code_of([] {
            decode(
                R"({"components":[{"A1":0.5,"A2":1,"B1":0,"B2":1,"p":0,"q":0,"L":1,"S":[0],"unbounded":false}]})");
          }) == ErrorCode::malformed_code);
    CHECK(decode(R"({"components":[]})").components.empty());
  }

  TEST_CASE("overflowing endpoints are reported") {
    const auto comp = interval(INT64_MAX, 0, INT64_MAX, 0, 0, 0);
    CHECK(code_of([&] { eval_endpoints(comp, 2, 3); }) == ErrorCode::overflow);
  }
}
