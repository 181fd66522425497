/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ulam/ulam.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "ulam/cache.hpp"
#include "ulam/engine.hpp"
#include "ulam/miner.hpp"
#include "ulam/pattern.hpp"
#include "ulam/presburger.hpp"
#include "ulam/regularity.hpp"
#include "ulam/report.hpp"
#include "ulam/rigidity.hpp"

struct ulam_prefix {
  ulam::UlamPrefix value;
};

struct ulam_code {
  ulam::PatternCode value;
};

namespace {

thread_local std::string g_last_error;

struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ulam_status fail(ulam_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes at the boundary.
template <typename Body>
ulam_status guarded(Body&& body) noexcept {
  try {
    g_last_error.clear();
    body();
    return ULAM_OK;
  } catch (const ulam::Error& e) {
    return fail(static_cast<ulam_status>(e.code()), e.what());
  } catch (const NullArgument& e) {
    return fail(ULAM_ERR_NULL_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ULAM_ERR_HORIZON_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(ULAM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ULAM_ERR_INTERNAL, "unknown exception");
  }
}

void need(const void* p, const char* name) {
  if (!p) throw NullArgument(std::string(name) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

ulam::CheckOptions options(unsigned flags) {
  ulam::CheckOptions opts;
  opts.override_applicability = flags & ULAM_FLAG_OVERRIDE_APPLICABILITY;
  opts.allow_non_coprime = flags & ULAM_FLAG_ALLOW_NON_COPRIME;
  opts.limits = ulam::default_limits();
  return opts;
}

ulam::PeriodPolicy policy(uint64_t min_periods, int64_t num, int64_t den) {
  return ulam::PeriodPolicy{min_periods, ulam::Rational(num, den)};
}

ulam::APDecomposition decompose(const ulam_prefix* prefix, uint64_t min_periods, int64_t num,
                                int64_t den, unsigned flags) {
  need(prefix, "prefix");
  ulam::require_coprime(prefix->value.params(), flags & ULAM_FLAG_ALLOW_NON_COPRIME);
  const auto g = ulam::gaps(prefix->value);
  const auto cand = ulam::detect_period(g, policy(min_periods, num, den));
  if (!cand) {
    throw ulam::Error(ulam::ErrorCode::stale_candidate,
                      "no periodicity candidate on this prefix under the given policy");
  }
  return ulam::ap_decomposition(prefix->value, *cand);
}

void copy_out(std::span<const uint64_t> src, size_t offset, uint64_t* buffer, size_t capacity,
              size_t* written) {
  need(written, "written");
  *written = 0;
  if (offset >= src.size() || capacity == 0) return;
  need(buffer, "buffer");
  const size_t n = std::min(capacity, src.size() - offset);
  std::memcpy(buffer, src.data() + offset, n * sizeof(uint64_t));
  *written = n;
}

}  // namespace

extern "C" {

const char* ulam_last_error(void) { return g_last_error.c_str(); }

const char* ulam_status_name(ulam_status status) {
  switch (status) {
    case ULAM_OK: return "ok";
    case ULAM_ERR_NULL_ARGUMENT: return "null-argument";
    default: return ulam::to_string(static_cast<ulam::ErrorCode>(status));
  }
}

void ulam_string_free(char* s) { std::free(s); }

const char* ulam_version(void) { return "0.1.0"; }

ulam_status ulam_set_max_horizon(uint64_t max_horizon) {
  if (max_horizon == 0) return fail(ULAM_ERR_PRECONDITION, "max horizon must be positive");
  ulam::default_limits().max_horizon = max_horizon;
  return ULAM_OK;
}

uint64_t ulam_get_max_horizon(void) { return ulam::default_limits().max_horizon; }

// ---- engine ---------------------------------------------------------------

ulam_status ulam_validate_params(uint64_t a, uint64_t b, int* coprime) {
  return guarded([&] {
    const auto params = ulam::UlamParams::validate(a, b);
    if (coprime) *coprime = params.coprime() ? 1 : 0;
  });
}

ulam_status ulam_prefix_generate(uint64_t a, uint64_t b, uint64_t horizon, ulam_prefix** out) {
  return guarded([&] {
    need(out, "out");
    *out = new ulam_prefix{ulam::generate_to_horizon(ulam::UlamParams::validate(a, b), horizon)};
  });
}

ulam_status ulam_prefix_generate_count(uint64_t a, uint64_t b, uint64_t k, ulam_prefix** out) {
  return guarded([&] {
    need(out, "out");
    *out = new ulam_prefix{ulam::generate_count(ulam::UlamParams::validate(a, b), k)};
  });
}

ulam_status ulam_prefix_extend(const ulam_prefix* prefix, uint64_t horizon, ulam_prefix** out) {
  return guarded([&] {
    need(prefix, "prefix");
    need(out, "out");
    *out = new ulam_prefix{ulam::extend(prefix->value, horizon)};
  });
}

ulam_status ulam_prefix_restrict(const ulam_prefix* prefix, uint64_t horizon, ulam_prefix** out) {
  return guarded([&] {
    need(prefix, "prefix");
    need(out, "out");
    *out = new ulam_prefix{prefix->value.restrict_to(horizon)};
  });
}

void ulam_prefix_free(ulam_prefix* prefix) { delete prefix; }

ulam_status ulam_prefix_info(const ulam_prefix* prefix, uint64_t* a, uint64_t* b,
                             uint64_t* horizon, size_t* term_count) {
  return guarded([&] {
    need(prefix, "prefix");
    if (a) *a = prefix->value.params().a();
    if (b) *b = prefix->value.params().b();
    if (horizon) *horizon = prefix->value.horizon();
    if (term_count) *term_count = prefix->value.size();
  });
}

ulam_status ulam_prefix_terms(const ulam_prefix* prefix, size_t offset, uint64_t* buffer,
                              size_t capacity, size_t* written) {
  return guarded([&] {
    need(prefix, "prefix");
    copy_out(prefix->value.terms(), offset, buffer, capacity, written);
  });
}

ulam_status ulam_prefix_gaps(const ulam_prefix* prefix, size_t offset, uint64_t* buffer,
                             size_t capacity, size_t* written) {
  return guarded([&] {
    need(prefix, "prefix");
    copy_out(ulam::gaps(prefix->value), offset, buffer, capacity, written);
  });
}

ulam_status ulam_prefix_rep_count(const ulam_prefix* prefix, uint64_t n, uint64_t* out) {
  return guarded([&] {
    need(prefix, "prefix");
    need(out, "out");
    *out = ulam::rep_count_exact(prefix->value, n);
  });
}

ulam_status ulam_is_member(uint64_t a, uint64_t b, uint64_t m, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = ulam::is_member(ulam::UlamParams::validate(a, b), m) ? 1 : 0;
  });
}

ulam_status ulam_nth_term(uint64_t a, uint64_t b, uint64_t k, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = ulam::nth_term(ulam::UlamParams::validate(a, b), k);
  });
}

ulam_status ulam_count_upto(uint64_t a, uint64_t b, uint64_t n, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = ulam::count_upto(ulam::UlamParams::validate(a, b), n);
  });
}

// ---- cache ----------------------------------------------------------------

ulam_status ulam_cache_write(const ulam_prefix* prefix, const char* path) {
  return guarded([&] {
    need(prefix, "prefix");
    need(path, "path");
    ulam::cache::write(prefix->value, path);
  });
}

ulam_status ulam_cache_read(const char* path, ulam_prefix** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new ulam_prefix{ulam::cache::read(path)};
  });
}

ulam_status ulam_cache_info(const char* path, char** json_out) {
  return guarded([&] {
    need(path, "path");
    need(json_out, "json_out");
    const auto h = ulam::cache::info(path);
    *json_out = dup(nlohmann::json{{"a", h.a},
                                   {"b", h.b},
                                   {"term_count", h.term_count},
                                   {"horizon", h.horizon},
                                   {"file_size", h.file_size}}
                        .dump());
  });
}

ulam_status ulam_write_file_atomic(const char* path, const char* data, size_t size) {
  return guarded([&] {
    need(path, "path");
    if (size > 0) need(data, "data");
    ulam::write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(data), size));
  });
}

// ---- pattern codes --------------------------------------------------------

ulam_status ulam_code_decode(const char* text, size_t length, ulam_code** out,
                             size_t* error_offset) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    try {
      *out = new ulam_code{ulam::decode(std::string_view(text, length))};
    } catch (const ulam::ParseError& e) {
      if (error_offset) *error_offset = e.offset();
      throw;
    }
  });
}

ulam_status ulam_code_encode(const ulam_code* code, char** text_out) {
  return guarded([&] {
    need(code, "code");
    need(text_out, "text_out");
    *text_out = dup(ulam::encode(code->value));
  });
}

void ulam_code_free(ulam_code* code) { delete code; }

ulam_status ulam_code_in_pattern(const ulam_code* code, int64_t a, int64_t b, int64_t m,
                                 int* out) {
  return guarded([&] {
    need(code, "code");
    need(out, "out");
    *out = ulam::in_pattern(code->value, a, b, m) ? 1 : 0;
  });
}

ulam_status ulam_code_b_max(const ulam_code* code, int64_t a, int64_t b, int64_t* value,
                            int* has_value, int* has_unbounded) {
  return guarded([&] {
    need(code, "code");
    const auto bm = ulam::b_max(code->value, a, b);
    if (has_value) *has_value = bm.value ? 1 : 0;
    if (value && bm.value) *value = *bm.value;
    if (has_unbounded) *has_unbounded = bm.has_unbounded ? 1 : 0;
  });
}

ulam_status ulam_code_pattern_set(const ulam_code* code, int64_t a, int64_t b, char** json_out) {
  return guarded([&] {
    need(code, "code");
    need(json_out, "json_out");
    *json_out = dup(nlohmann::json(ulam::pattern_set(code->value, a, b)).dump());
  });
}

// ---- rigidity -------------------------------------------------------------

ulam_status ulam_verify_segment(const ulam_code* code, uint64_t a, uint64_t b, uint64_t first,
                                uint64_t last, unsigned flags, int* agrees, char** json_out) {
  return guarded([&] {
    need(code, "code");
    const auto rep = ulam::verify_segment(code->value, ulam::UlamParams::validate(a, b), first,
                                          last, options(flags));
    if (agrees) *agrees = rep.agrees ? 1 : 0;
    if (json_out) *json_out = dup(ulam::report::to_json(rep).dump());
  });
}

ulam_status ulam_search_threshold(const ulam_code* code, uint64_t a, uint64_t b, uint64_t last,
                                  unsigned flags, int* found, uint64_t* threshold) {
  return guarded([&] {
    need(code, "code");
    need(found, "found");
    const auto t = ulam::search_threshold(code->value, ulam::UlamParams::validate(a, b), last,
                                          options(flags));
    *found = t ? 1 : 0;
    if (t && threshold) *threshold = *t;
  });
}

ulam_status ulam_family_sweep(const ulam_code* code, uint64_t a, uint64_t modulus,
                              uint64_t residue, const uint64_t* n_values, size_t count, int64_t c,
                              int64_t d, unsigned flags, unsigned threads, char** jsonl_out,
                              char** csv_out, size_t* failures) {
  return guarded([&] {
    need(code, "code");
    if (count > 0) need(n_values, "n_values");
    ulam::SweepSpec spec{.a = a, .modulus = modulus, .residue = residue,
                         .n_values = std::vector<uint64_t>(n_values, n_values + count),
                         .c = c, .d = d};
    const auto entries = ulam::family_sweep(code->value, spec, options(flags), threads);
    if (failures) {
      *failures = 0;
      for (const auto& e : entries) {
        if (!e.report || !e.report->agrees) ++*failures;
      }
    }
    if (jsonl_out) *jsonl_out = dup(ulam::report::sweep_jsonl(entries));
    if (csv_out) *csv_out = dup(ulam::report::sweep_csv(entries));
  });
}

// ---- regularity -----------------------------------------------------------

ulam_status ulam_detect_period(const ulam_prefix* prefix, uint64_t min_periods,
                               int64_t coverage_num, int64_t coverage_den, int* found,
                               char** json_out) {
  return guarded([&] {
    need(prefix, "prefix");
    const auto cand = ulam::detect_period(ulam::gaps(prefix->value),
                                          policy(min_periods, coverage_num, coverage_den));
    if (found) *found = cand ? 1 : 0;
    if (json_out) {
      *json_out = dup(cand ? ulam::report::to_json(*cand).dump() : std::string("null"));
    }
  });
}

ulam_status ulam_density(uint64_t a, uint64_t b, uint64_t n, uint64_t* count, char** json_out) {
  return guarded([&] {
    const auto est = ulam::empirical_density(ulam::UlamParams::validate(a, b), n);
    if (count) *count = est.count;
    if (json_out) *json_out = dup(ulam::report::to_json(est).dump());
  });
}

ulam_status ulam_density_series(uint64_t a, uint64_t b, uint64_t n_max, uint64_t step,
                                char** csv_out) {
  return guarded([&] {
    need(csv_out, "csv_out");
    if (step == 0) throw ulam::Error(ulam::ErrorCode::precondition, "step must be positive");
    const auto params = ulam::UlamParams::validate(a, b);
    const auto prefix = ulam::generate_to_horizon(params, std::max(n_max, b));
    std::vector<uint64_t> ns;
    for (uint64_t n = step; n <= n_max; n += step) ns.push_back(n);
    if (ns.empty() || ns.back() != n_max) ns.push_back(n_max);
    *csv_out = dup(ulam::report::density_series_csv(prefix, ns));
  });
}

ulam_status ulam_density_check(uint64_t a, uint64_t b, int64_t q_num, uint64_t q_den, uint64_t k,
                               uint64_t from, uint64_t to, int side, int* holds,
                               uint64_t* first_violation) {
  return guarded([&] {
    need(holds, "holds");
    const auto res = ulam::density_inequality_check(
        ulam::UlamParams::validate(a, b), q_num, q_den, k, from, to,
        side == 0 ? ulam::DensitySide::upper : ulam::DensitySide::lower);
    *holds = res.holds ? 1 : 0;
    if (first_violation && res.first_violation) *first_violation = *res.first_violation;
  });
}

ulam_status ulam_census(const ulam_prefix* prefix, uint64_t modulus, uint64_t residue,
                        char** json_out) {
  return guarded([&] {
    need(prefix, "prefix");
    need(json_out, "json_out");
    *json_out =
        dup(ulam::report::to_json(ulam::residue_census(prefix->value, modulus, residue)).dump());
  });
}

ulam_status ulam_hierarchy_report(const ulam_prefix* prefix, const ulam_code* code,
                                  unsigned flags, char** json_out) {
  return guarded([&] {
    need(prefix, "prefix");
    need(json_out, "json_out");
    const auto rep = ulam::hierarchy_report(prefix->value, code ? &code->value : nullptr,
                                            std::nullopt, options(flags));
    *json_out = dup(ulam::report::to_json(rep).dump());
  });
}

// ---- arithmetic progressions ---------------------------------------------

ulam_status ulam_export_ap(const ulam_prefix* prefix, uint64_t min_periods, int64_t coverage_num,
                           int64_t coverage_den, unsigned flags, char** json_out) {
  return guarded([&] {
    need(json_out, "json_out");
    const auto dec = decompose(prefix, min_periods, coverage_num, coverage_den, flags);
    *json_out = dup(ulam::report::to_json(dec).dump());
  });
}

ulam_status ulam_export_presburger(const ulam_prefix* prefix, uint64_t min_periods,
                                   int64_t coverage_num, int64_t coverage_den, unsigned flags,
                                   char** text_out) {
  return guarded([&] {
    need(text_out, "text_out");
    const auto dec = decompose(prefix, min_periods, coverage_num, coverage_den, flags);
    *text_out = dup(ulam::to_presburger_text(dec));
  });
}

ulam_status ulam_export_ap_code(const ulam_prefix* prefix, uint64_t min_periods,
                                int64_t coverage_num, int64_t coverage_den, unsigned flags,
                                int bounded, ulam_code** out) {
  return guarded([&] {
    need(out, "out");
    const auto dec = decompose(prefix, min_periods, coverage_num, coverage_den, flags);
    *out = new ulam_code{ulam::ap_to_pattern_code(
        dec, bounded ? std::optional<uint64_t>(dec.horizon) : std::nullopt)};
  });
}

// ---- mining ---------------------------------------------------------------

ulam_status ulam_mine(uint64_t modulus, uint64_t residue, const uint64_t* train,
                      size_t train_count, const uint64_t* holdout, size_t holdout_count,
                      int64_t c, int64_t d, unsigned threads, ulam_code** code_out,
                      char** json_out) {
  return guarded([&] {
    need(code_out, "code_out");
    if (train_count > 0) need(train, "train");
    if (holdout_count > 0) need(holdout, "holdout");
    ulam::MineSpec spec{.modulus = modulus, .residue = residue,
                        .train = std::vector<uint64_t>(train, train + train_count),
                        .holdout = std::vector<uint64_t>(holdout, holdout + holdout_count),
                        .c = c, .d = d};
    auto result = ulam::mine(spec, options(0), threads);
    if (json_out) *json_out = dup(ulam::report::to_json(result).dump());
    *code_out = new ulam_code{std::move(result.code)};
  });
}

}  // extern "C"
