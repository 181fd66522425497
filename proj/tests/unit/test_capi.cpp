/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "ulam/ulam.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ulam_string_free(s);
  return out;
}

std::vector<uint64_t> terms_of(const ulam_prefix* p) {
  size_t n = 0;
  REQUIRE(ulam_prefix_info(p, nullptr, nullptr, nullptr, &n) == ULAM_OK);
  std::vector<uint64_t> out(n);
  size_t written = 0;
  REQUIRE(ulam_prefix_terms(p, 0, out.data(), out.size(), &written) == ULAM_OK);
  CHECK(written == n);
  return out;
}

const char* kExample =
    R"({"components":[{"A1":0,"A2":4,"B1":0,"B2":5,"L":1,"S":[0],"p":2,"q":-1,"unbounded":false}]})";

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("generation through handles") {
    ulam_prefix* p = nullptr;
    REQUIRE(ulam_prefix_generate(1, 2, 28, &p) == ULAM_OK);
    CHECK(terms_of(p) == std::vector<uint64_t>{1, 2, 3, 4, 6, 8, 11, 13, 16, 18, 26, 28});

    uint64_t window[3] = {};
    size_t written = 0;
    REQUIRE(ulam_prefix_terms(p, 10, window, 3, &written) == ULAM_OK);
    CHECK(written == 2);
    CHECK(window[0] == 26);
    CHECK(ulam_prefix_gaps(p, 0, window, 3, &written) == ULAM_OK);
    CHECK(window[2] == 1);

    ulam_prefix* longer = nullptr;
    REQUIRE(ulam_prefix_extend(p, 100, &longer) == ULAM_OK);
    ulam_prefix* direct = nullptr;
    REQUIRE(ulam_prefix_generate(1, 2, 100, &direct) == ULAM_OK);
    CHECK(terms_of(longer) == terms_of(direct));
    ulam_prefix* back = nullptr;
    REQUIRE(ulam_prefix_restrict(direct, 28, &back) == ULAM_OK);
    CHECK(terms_of(back) == terms_of(p));

    uint64_t reps = 0;
    CHECK(ulam_prefix_rep_count(p, 28, &reps) == ULAM_OK);
    CHECK(reps == 1);
    CHECK(ulam_prefix_rep_count(p, 29, &reps) == ULAM_ERR_INSUFFICIENT_HORIZON);

    ulam_prefix_free(back);
    ulam_prefix_free(direct);
    ulam_prefix_free(longer);
    ulam_prefix_free(p);
    ulam_prefix_free(nullptr);
  }

  TEST_CASE("scalar queries") {
    int member = -1;
    CHECK(ulam_is_member(1, 2, 5, &member) == ULAM_OK);
    CHECK(member == 0);
    uint64_t v = 0;
    CHECK(ulam_nth_term(1, 2, 12, &v) == ULAM_OK);
    CHECK(v == 28);
    CHECK(ulam_count_upto(1, 2, 28, &v) == ULAM_OK);
    CHECK(v == 12);
    int coprime = -1;
    CHECK(ulam_validate_params(2, 4, &coprime) == ULAM_OK);
    CHECK(coprime == 0);
  }

  TEST_CASE("errors carry status and message") {
    ulam_prefix* p = nullptr;
    CHECK(ulam_prefix_generate(3, 2, 10, &p) == ULAM_ERR_INVALID_PARAMETERS);
    CHECK(p == nullptr);
    CHECK(std::strlen(ulam_last_error()) > 0);
    CHECK(std::string(ulam_status_name(ULAM_ERR_INVALID_PARAMETERS)) == "invalid-parameters");
    CHECK(ulam_prefix_generate(1, 2, 10, nullptr) == ULAM_ERR_NULL_ARGUMENT);
    CHECK(ulam_prefix_info(nullptr, nullptr, nullptr, nullptr, nullptr) == ULAM_ERR_NULL_ARGUMENT);

    const uint64_t saved = ulam_get_max_horizon();
    CHECK(ulam_set_max_horizon(1000) == ULAM_OK);
    CHECK(ulam_prefix_generate(1, 2, 5000, &p) == ULAM_ERR_HORIZON_TOO_LARGE);
    CHECK(ulam_set_max_horizon(saved) == ULAM_OK);

    ulam_code* code = nullptr;
    size_t offset = 0;
    const std::string broken = R"({"components":[)";
    CHECK(ulam_code_decode(broken.data(), broken.size(), &code, &offset) == ULAM_ERR_PARSE);
    CHECK(offset > 0);
    const std::string bad_mask =
        R"({"components":[{"A1":0,"A2":0,"B1":0,"B2":0,"L":0,"S":[0],"p":0,"q":0,"unbounded":false}]})";
    CHECK(ulam_code_decode(bad_mask.data(), bad_mask.size(), &code, nullptr) ==
          ULAM_ERR_MALFORMED_CODE);
  }

  TEST_CASE("error messages are per thread") {
    ulam_prefix* p = nullptr;
    CHECK(ulam_prefix_generate(5, 5, 10, &p) == ULAM_ERR_INVALID_PARAMETERS);
    std::string other;
    std::thread t([&] {
      int m = 0;
      ulam_is_member(1, 2, 3, &m);
      other = ulam_last_error();
    });
    t.join();
    CHECK(other.empty());
    CHECK(std::strlen(ulam_last_error()) > 0);
  }

  TEST_CASE("pattern codes and rigidity") {
    ulam_code* code = nullptr;
    REQUIRE(ulam_code_decode(kExample, std::strlen(kExample), &code, nullptr) == ULAM_OK);
    char* text = nullptr;
    REQUIRE(ulam_code_encode(code, &text) == ULAM_OK);
    CHECK(take(text) == kExample);
    int in = 0;
    CHECK(ulam_code_in_pattern(code, 1, 10, 45, &in) == ULAM_OK);
    CHECK(in == 1);
    int64_t bmax = 0;
    int has = 0, unb = 0;
    CHECK(ulam_code_b_max(code, 1, 10, &bmax, &has, &unb) == ULAM_OK);
    CHECK(bmax == 49);
    CHECK(has == 1);
    CHECK(unb == 0);
    char* set = nullptr;
    CHECK(ulam_code_pattern_set(code, 1, 4, &set) == ULAM_OK);
    CHECK(take(set) == "[18,19]");

    int agrees = 0;
    char* js = nullptr;
    CHECK(ulam_verify_segment(code, 1, 10, 42, 49, 0, &agrees, &js) == ULAM_OK);
    CHECK(agrees == 1);
    CHECK(take(js).find("\"verified-on-segment\"") != std::string::npos);
    CHECK(ulam_verify_segment(code, 1, 10, 40, 49, 0, &agrees, nullptr) == ULAM_OK);
    CHECK(agrees == 0);

    int found = 0;
    uint64_t thr = 0;
    CHECK(ulam_search_threshold(code, 1, 10, 49, 0, &found, &thr) == ULAM_OK);
    CHECK(found == 1);
    CHECK(thr == 41);  // 40 = 4n is a term outside the interval

    const uint64_t ns[] = {9, 8, 7, 6};
    char* jsonl = nullptr;
    char* csv = nullptr;
    size_t failures = 0;
    CHECK(ulam_family_sweep(code, 1, 1, 0, ns, 4, 5, -1, 0, 2, &jsonl, &csv, &failures) ==
          ULAM_OK);
    CHECK(failures == 4);  // [1, 5n-1] is wider than the interval
    const std::string c = take(csv);
    CHECK(c.rfind("n,first,last,agrees,first_mismatch,direction,error\n6,", 0) == 0);
    CHECK(take(jsonl).find("\"n\":9") != std::string::npos);
    ulam_code_free(code);
  }

  TEST_CASE("regularity, export and cache") {
    ulam_prefix* p = nullptr;
    REQUIRE(ulam_prefix_generate(2, 5, 20000, &p) == ULAM_OK);
    int found = 0;
    char* js = nullptr;
    REQUIRE(ulam_detect_period(p, 3, 1, 2, &found, &js) == ULAM_OK);
    CHECK(found == 1);
    CHECK(take(js).find("\"candidate-grade\"") != std::string::npos);

    char* text = nullptr;
    REQUIRE(ulam_export_presburger(p, 3, 1, 2, 0, &text) == ULAM_OK);
    CHECK(take(text).rfind("x = 2 ∨ x = 5", 0) == 0);
    REQUIRE(ulam_export_ap(p, 3, 1, 2, 0, &js) == ULAM_OK);
    CHECK(take(js).find("\"progressions\"") != std::string::npos);
    ulam_code* code = nullptr;
    REQUIRE(ulam_export_ap_code(p, 3, 1, 2, 0, 1, &code) == ULAM_OK);
    int in = 0;
    CHECK(ulam_code_in_pattern(code, 2, 5, 5, &in) == ULAM_OK);
    CHECK(in == 1);
    CHECK(ulam_code_in_pattern(code, 2, 5, 6, &in) == ULAM_OK);
    CHECK(in == 0);

    REQUIRE(ulam_hierarchy_report(p, code, 0, &js) == ULAM_OK);
    CHECK(take(js).find("\"R1\":\"verified-on-prefix\"") != std::string::npos);
    ulam_code_free(code);

    ulam_prefix* irregular = nullptr;
    REQUIRE(ulam_prefix_generate(1, 2, 2000, &irregular) == ULAM_OK);
    CHECK(ulam_export_ap(irregular, 3, 1, 2, 0, &js) == ULAM_ERR_STALE_CANDIDATE);
    REQUIRE(ulam_census(p, 2, 0, &js) == ULAM_OK);
    CHECK(take(js).find("\"largest\":12") != std::string::npos);
    ulam_prefix_free(irregular);

    uint64_t count = 0;
    REQUIRE(ulam_density(1, 2, 28, &count, &js) == ULAM_OK);
    CHECK(count == 12);
    CHECK(take(js).find("\"12/29\"") != std::string::npos);
    REQUIRE(ulam_density_series(1, 2, 100, 50, &js) == ULAM_OK);
    CHECK(take(js).rfind("n,count,ratio\n50,", 0) == 0);
    int holds = 0;
    uint64_t viol = 0;
    CHECK(ulam_density_check(1, 2, 0, 1, 10, 0, 100, 0, &holds, &viol) == ULAM_OK);
    CHECK(holds == 0);
    CHECK(viol == 1);

    const auto file = std::filesystem::temp_directory_path() /
                      ("ulam_capi_" + std::to_string(::getpid()) + ".ulam");
    REQUIRE(ulam_cache_write(p, file.c_str()) == ULAM_OK);
    ulam_prefix* loaded = nullptr;
    REQUIRE(ulam_cache_read(file.c_str(), &loaded) == ULAM_OK);
    CHECK(terms_of(loaded) == terms_of(p));
    REQUIRE(ulam_cache_info(file.c_str(), &js) == ULAM_OK);
    CHECK(take(js).find("\"horizon\":20000") != std::string::npos);
    std::filesystem::remove(file);
    CHECK(ulam_cache_read(file.c_str(), &loaded) == ULAM_ERR_IO);
    ulam_prefix_free(loaded);
    ulam_prefix_free(p);
  }

  TEST_CASE("mining") {
    const uint64_t train[] = {10, 12, 14, 16, 18, 20};
    const uint64_t holdout[] = {30, 40};
    ulam_code* code = nullptr;
    char* js = nullptr;
    REQUIRE(ulam_mine(2, 0, train, 6, holdout, 2, 5, -1, 2, &code, &js) == ULAM_OK);
    CHECK(take(js).find("\"verification\"") != std::string::npos);
    int in = 0;
    CHECK(ulam_code_in_pattern(code, 1, 50, 210, &in) == ULAM_OK);
    CHECK(in == 1);
    ulam_code_free(code);
    CHECK(ulam_mine(2, 0, train, 2, holdout, 2, 5, -1, 1, &code, nullptr) == ULAM_ERR_PRECONDITION);
  }
}
