/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Command-line front end. Talks to the library only through ulam.h.
//
// Exit status: 0 success, 1 the analysis came out negative (a segment
// mismatch under --expect-agree, a violated density inequality), 2 the tool
// itself failed.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulam/ulam.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitFailure = 2;

struct ToolError : std::runtime_error {
  ToolError(ulam_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  ulam_status status;
};

void check(ulam_status s) {
  if (s != ULAM_OK) throw ToolError(s, ulam_last_error());
}

struct PrefixDeleter {
  void operator()(ulam_prefix* p) const { ulam_prefix_free(p); }
};
struct CodeDeleter {
  void operator()(ulam_code* c) const { ulam_code_free(c); }
};
using PrefixPtr = std::unique_ptr<ulam_prefix, PrefixDeleter>;
using CodePtr = std::unique_ptr<ulam_code, CodeDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  ulam_string_free(s);
  return out;
}

struct Global {
  unsigned threads = 1;
  std::string cache_dir;
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 1;
  bool override_applicability = false;
  bool allow_non_coprime = false;
  bool expect_agree = false;
  std::uint64_t max_horizon = 0;

  unsigned flags() const {
    return (override_applicability ? ULAM_FLAG_OVERRIDE_APPLICABILITY : 0u) |
           (allow_non_coprime ? ULAM_FLAG_ALLOW_NON_COPRIME : 0u);
  }
};

void emit(const Global& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::string body = text;
  if (!body.empty() && body.back() != '\n') body += '\n';
  check(ulam_write_file_atomic(g.output.c_str(), body.data(), body.size()));
}

void write_side(const std::string& path, std::string body) {
  if (path.empty()) return;
  if (!body.empty() && body.back() != '\n') body += '\n';
  check(ulam_write_file_atomic(path.c_str(), body.data(), body.size()));
}

std::vector<std::uint64_t> all_terms(const ulam_prefix* p) {
  size_t count = 0;
  check(ulam_prefix_info(p, nullptr, nullptr, nullptr, &count));
  std::vector<std::uint64_t> out(count);
  size_t written = 0;
  check(ulam_prefix_terms(p, 0, out.data(), out.size(), &written));
  out.resize(written);
  return out;
}

std::vector<std::uint64_t> all_gaps(const ulam_prefix* p) {
  size_t count = 0;
  check(ulam_prefix_info(p, nullptr, nullptr, nullptr, &count));
  std::vector<std::uint64_t> out(count > 0 ? count - 1 : 0);
  size_t written = 0;
  check(ulam_prefix_gaps(p, 0, out.data(), out.size(), &written));
  out.resize(written);
  return out;
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Prefix for (a,b) to `horizon`, reusing and refreshing the cache directory
// when one is configured.
PrefixPtr obtain_prefix(const Global& g, std::uint64_t a, std::uint64_t b, std::uint64_t horizon) {
  horizon = std::max(horizon, b);
  if (g.cache_dir.empty()) {
    ulam_prefix* p = nullptr;
    check(ulam_prefix_generate(a, b, horizon, &p));
    return PrefixPtr(p);
  }
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(g.cache_dir, ec);
  const fs::path path =
      fs::path(g.cache_dir) / ("U_" + std::to_string(a) + "_" + std::to_string(b) + ".ulam");
  PrefixPtr cached;
  if (fs::exists(path)) {
    ulam_prefix* p = nullptr;
    if (ulam_cache_read(path.c_str(), &p) == ULAM_OK) {
      cached.reset(p);
    } else {
      std::cerr << "warning: ignoring unreadable cache " << path << ": " << ulam_last_error()
                << '\n';
    }
  }
  ulam_prefix* out = nullptr;
  if (cached) {
    std::uint64_t have = 0;
    check(ulam_prefix_info(cached.get(), nullptr, nullptr, &have, nullptr));
    if (have >= horizon) {
      check(ulam_prefix_restrict(cached.get(), horizon, &out));
      return PrefixPtr(out);
    }
    check(ulam_prefix_extend(cached.get(), horizon, &out));
  } else {
    check(ulam_prefix_generate(a, b, horizon, &out));
  }
  PrefixPtr fresh(out);
  check(ulam_cache_write(fresh.get(), path.c_str()));
  return fresh;
}

CodePtr load_code(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ToolError(ULAM_ERR_IO, "cannot open pattern code " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  ulam_code* code = nullptr;
  size_t offset = 0;
  const ulam_status s = ulam_code_decode(text.data(), text.size(), &code, &offset);
  if (s == ULAM_ERR_PARSE) {
    throw ToolError(s, path + ": " + ulam_last_error() + " (byte " + std::to_string(offset) + ")");
  }
  check(s);
  return CodePtr(code);
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Fraction parse_fraction(const std::string& text) {
  Fraction f;
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      f.num = std::stoll(text);
    } else {
      f.num = std::stoll(text.substr(0, slash));
      f.den = std::stoll(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw ToolError(ULAM_ERR_PRECONDITION, "cannot parse fraction '" + text + "'");
  }
  if (f.den <= 0) throw ToolError(ULAM_ERR_PRECONDITION, "fraction denominator must be positive");
  return f;
}

std::vector<std::uint64_t> class_members(std::uint64_t lo, std::uint64_t hi, std::uint64_t modulus,
                                         std::uint64_t residue) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (n % modulus == residue) out.push_back(n);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ulam - Ulam sequence generation and structure analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ulam_version());

  Global g;
  if (const char* env = std::getenv("ULAM_CACHE_DIR")) g.cache_dir = env;
  app.add_option("--threads", g.threads, "Worker threads for sweeps and mining")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "Prefix cache directory (default $ULAM_CACHE_DIR)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output,-o", g.output, "Write the report here (atomically) instead of stdout");
  app.add_option("--seed", g.seed, "Seed for sampled mining");
  app.add_flag("--override-applicability", g.override_applicability,
               "Check codes outside their declared residue class");
  app.add_flag("--allow-non-coprime", g.allow_non_coprime, "Analyse non-coprime (a,b)");
  app.add_flag("--expect-agree", g.expect_agree, "Exit 1 when a segment check disagrees");
  app.add_option("--max-horizon", g.max_horizon, "Refuse to sieve beyond this horizon");

  std::uint64_t a = 1, b = 2, horizon = 0, count = 0, m = 0, k = 1, n = 0;
  std::uint64_t from = 0, to = 0, modulus = 2, residue = 0, min_periods = 3, step = 0;
  std::string coverage = "1/2", q = "1/2", side = "upper", code_path, code_out, csv_out, path;
  std::int64_t seg_c = 1, seg_d = 0;
  std::vector<std::uint64_t> n_values, train, holdout;
  std::uint64_t n_min = 0, n_max = 0, samples = 5, holdout_count = 3;
  bool search = false, bounded = false;
  std::string cache_out;

  auto add_ab = [&](CLI::App* sub) {
    sub->add_option("--a", a, "First term")->required();
    sub->add_option("--b", b, "Second term")->required();
  };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--min-periods", min_periods, "Full periods the tail must span");
    sub->add_option("--min-coverage", coverage, "Fraction of gaps the tail must cover");
  };

  auto* generate = app.add_subcommand("generate", "List U(a,b) up to a horizon or term count");
  add_ab(generate);
  auto* gen_h = generate->add_option("--horizon", horizon, "Largest integer decided");
  auto* gen_k = generate->add_option("--count", count, "Number of terms");
  gen_h->excludes(gen_k);
  generate->add_option("--cache-out", cache_out, "Also write the prefix as a binary cache");

  auto* member = app.add_subcommand("member", "Is m in U(a,b)?");
  add_ab(member);
  member->add_option("--m", m)->required();

  auto* nth = app.add_subcommand("nth", "k-th term of U(a,b)");
  add_ab(nth);
  nth->add_option("--k", k)->required();

  auto* cnt = app.add_subcommand("count", "|U(a,b) ∩ [0,n]|");
  add_ab(cnt);
  cnt->add_option("--n", n)->required();

  auto* gaps_cmd = app.add_subcommand("gaps", "Gap sequence of a prefix");
  add_ab(gaps_cmd);
  gaps_cmd->add_option("--horizon", horizon)->required();

  auto* detect = app.add_subcommand("detect-period", "Eventual gap periodicity candidate");
  add_ab(detect);
  detect->add_option("--horizon", horizon)->required();
  add_policy(detect);

  auto* density = app.add_subcommand("density", "Empirical density C(n)/(n+1)");
  add_ab(density);
  density->add_option("--n", n)->required();
  density->add_option("--series-step", step, "Emit a CSV series sampled every STEP instead");

  auto* dcheck = app.add_subcommand("density-check", "Integer density inequality on a range");
  add_ab(dcheck);
  dcheck->add_option("--q", q, "Rational bound p/s");
  dcheck->add_option("--k", k, "Tolerance 1/k")->check(CLI::PositiveNumber);
  dcheck->add_option("--from", from);
  dcheck->add_option("--to", to)->required();
  dcheck->add_option("--side", side)->check(CLI::IsMember({"upper", "lower"}));

  auto* census = app.add_subcommand("census", "Residue-class census of a prefix");
  add_ab(census);
  census->add_option("--horizon", horizon)->required();
  census->add_option("--modulus", modulus);
  census->add_option("--residue", residue);

  auto* verify = app.add_subcommand("verify-pattern", "Compare U(a,b) with a code on [from, to]");
  add_ab(verify);
  verify->add_option("--code", code_path, "Pattern code JSON file")->required();
  verify->add_option("--from", from);
  verify->add_option("--to", to)->required();
  verify->add_flag("--search-threshold", search, "Also report the least agreeing threshold");

  auto* sweep = app.add_subcommand("sweep", "Check a code across U(a,n) for a residue class");
  sweep->add_option("--code", code_path)->required();
  sweep->add_option("--a", a, "Fixed first term");
  sweep->add_option("--modulus", modulus);
  sweep->add_option("--residue", residue);
  sweep->add_option("--n", n_values, "Explicit n values")->delimiter(',');
  sweep->add_option("--n-min", n_min);
  sweep->add_option("--n-max", n_max);
  sweep->add_option("--c", seg_c, "Segment end slope");
  sweep->add_option("--d", seg_d, "Segment end offset");
  sweep->add_option("--csv-out", csv_out, "CSV summary path");

  auto* mine = app.add_subcommand("mine", "Mine a mask-free code for U(1,n)");
  mine->add_option("--modulus", modulus);
  mine->add_option("--residue", residue);
  mine->add_option("--train", train)->delimiter(',');
  mine->add_option("--holdout", holdout)->delimiter(',');
  mine->add_option("--n-min", n_min);
  mine->add_option("--n-max", n_max);
  mine->add_option("--samples", samples, "Training samples drawn with --seed");
  mine->add_option("--holdout-count", holdout_count);
  mine->add_option("--c", seg_c);
  mine->add_option("--d", seg_d);
  mine->add_option("--code-out", code_out, "Write the mined code here");

  auto* export_ap = app.add_subcommand("export-ap", "Arithmetic-progression decomposition");
  add_ab(export_ap);
  export_ap->add_option("--horizon", horizon)->required();
  add_policy(export_ap);
  export_ap->add_option("--code-out", code_out, "Also write the decomposition as a pattern code");
  export_ap->add_flag("--bounded", bounded, "Bound the exported code at the horizon");

  auto* export_pb = app.add_subcommand("export-presburger", "Additive first-order definition");
  add_ab(export_pb);
  export_pb->add_option("--horizon", horizon)->required();
  add_policy(export_pb);

  auto* hierarchy = app.add_subcommand("hierarchy", "R1..R5 status report on a prefix");
  add_ab(hierarchy);
  hierarchy->add_option("--horizon", horizon)->required();
  hierarchy->add_option("--code", code_path);

  auto* cache = app.add_subcommand("cache", "Binary prefix cache files");
  cache->require_subcommand(1);
  auto* cache_info = cache->add_subcommand("info", "Show a cache header");
  cache_info->add_option("--path", path)->required();
  auto* cache_write = cache->add_subcommand("write", "Generate and store a prefix");
  add_ab(cache_write);
  cache_write->add_option("--horizon", horizon)->required();
  cache_write->add_option("--path", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (g.max_horizon) check(ulam_set_max_horizon(g.max_horizon));
    const bool as_json = g.format == "json";
    const bool as_csv = g.format == "csv";

    if (*generate) {
      PrefixPtr p;
      if (*gen_k) {
        ulam_prefix* raw = nullptr;
        check(ulam_prefix_generate_count(a, b, count, &raw));
        p.reset(raw);
      } else if (*gen_h) {
        p = obtain_prefix(g, a, b, horizon);
      } else {
        throw ToolError(ULAM_ERR_PRECONDITION, "generate needs --horizon or --count");
      }
      std::uint64_t h = 0;
      check(ulam_prefix_info(p.get(), nullptr, nullptr, &h, nullptr));
      auto terms = all_terms(p.get());
      if (*gen_k && terms.size() > count) terms.resize(count);
      if (!cache_out.empty()) check(ulam_cache_write(p.get(), cache_out.c_str()));
      if (as_json) {
        emit(g, json{{"a", a}, {"b", b}, {"horizon", h}, {"terms", terms}}.dump());
      } else if (as_csv) {
        std::string out = "index,term\n";
        for (std::size_t i = 0; i < terms.size(); ++i) {
          out += std::to_string(i + 1) + "," + std::to_string(terms[i]) + "\n";
        }
        emit(g, out);
      } else {
        emit(g, join(terms, " "));
      }
      return kExitOk;
    }

    if (*member) {
      int out = 0;
      check(ulam_is_member(a, b, m, &out));
      emit(g, as_json ? json{{"a", a}, {"b", b}, {"m", m}, {"member", out != 0}}.dump()
                      : std::string(out ? "true" : "false"));
      return kExitOk;
    }

    if (*nth) {
      std::uint64_t out = 0;
      check(ulam_nth_term(a, b, k, &out));
      emit(g, as_json ? json{{"a", a}, {"b", b}, {"k", k}, {"term", out}}.dump()
                      : std::to_string(out));
      return kExitOk;
    }

    if (*cnt) {
      std::uint64_t out = 0;
      check(ulam_count_upto(a, b, n, &out));
      emit(g, as_json ? json{{"a", a}, {"b", b}, {"n", n}, {"count", out}}.dump()
                      : std::to_string(out));
      return kExitOk;
    }

    if (*gaps_cmd) {
      auto p = obtain_prefix(g, a, b, horizon);
      const auto gs = all_gaps(p.get());
      if (as_json) {
        emit(g, json{{"a", a}, {"b", b}, {"horizon", horizon}, {"gaps", gs}}.dump());
      } else if (as_csv) {
        std::string out = "k,gap\n";
        for (std::size_t i = 0; i < gs.size(); ++i) {
          out += std::to_string(i) + "," + std::to_string(gs[i]) + "\n";
        }
        emit(g, out);
      } else {
        emit(g, join(gs, " "));
      }
      return kExitOk;
    }

    if (*detect) {
      auto p = obtain_prefix(g, a, b, horizon);
      const Fraction cov = parse_fraction(coverage);
      int found = 0;
      char* js = nullptr;
      check(ulam_detect_period(p.get(), min_periods, cov.num, cov.den, &found, &js));
      const std::string text = take(js);
      if (as_json || !found) {
        emit(g, as_json ? text : "none");
      } else {
        const json c = json::parse(text);
        std::ostringstream os;
        os << "threshold " << c["threshold"] << " period " << c["period"] << " G "
           << c["period_sum"] << " density " << c["density"]["exact"].get<std::string>()
           << " (candidate-grade, " << c["periods_observed"] << " periods observed)";
        emit(g, os.str());
      }
      return kExitOk;
    }

    if (*density) {
      if (step > 0) {
        char* csv = nullptr;
        check(ulam_density_series(a, b, n, step, &csv));
        emit(g, take(csv));
        return kExitOk;
      }
      char* js = nullptr;
      check(ulam_density(a, b, n, nullptr, &js));
      const std::string text = take(js);
      if (as_json) {
        emit(g, text);
      } else {
        const json d = json::parse(text);
        std::ostringstream os;
        os.precision(8);
        os << d["count"] << "/" << (n + 1) << " = " << d["ratio"]["value"].get<double>();
        emit(g, os.str());
      }
      return kExitOk;
    }

    if (*dcheck) {
      const Fraction fq = parse_fraction(q);
      int holds = 0;
      std::uint64_t violation = 0;
      check(ulam_density_check(a, b, fq.num, static_cast<std::uint64_t>(fq.den), k, from, to,
                               side == "upper" ? 0 : 1, &holds, &violation));
      json out{{"a", a}, {"b", b}, {"q", q}, {"k", k}, {"from", from}, {"to", to},
               {"side", side}, {"holds", holds != 0},
               {"first_violation", holds ? json(nullptr) : json(violation)}};
      emit(g, as_json ? out.dump()
                      : (holds ? std::string("holds")
                               : "violated at n = " + std::to_string(violation)));
      return holds ? kExitOk : kExitRefuted;
    }

    if (*census) {
      auto p = obtain_prefix(g, a, b, horizon);
      char* js = nullptr;
      check(ulam_census(p.get(), modulus, residue, &js));
      const std::string text = take(js);
      if (as_json) {
        emit(g, text);
      } else {
        const json c = json::parse(text);
        std::ostringstream os;
        os << "class " << residue << " mod " << modulus << ": " << c["count"] << " terms, largest "
           << c["largest"] << ", free tail from " << c["free_tail_from"];
        emit(g, os.str());
      }
      return kExitOk;
    }

    if (*verify) {
      auto code = load_code(code_path);
      int agrees = 0;
      char* js = nullptr;
      check(ulam_verify_segment(code.get(), a, b, from, to, g.flags(), &agrees, &js));
      json rep = json::parse(take(js));
      if (search) {
        int found = 0;
        std::uint64_t t = 0;
        check(ulam_search_threshold(code.get(), a, b, to, g.flags(), &found, &t));
        rep["threshold"] = found ? json(t) : json(nullptr);
      }
      if (as_json) {
        emit(g, rep.dump());
      } else {
        std::string line = rep["status"].get<std::string>() + " [" + std::to_string(from) + ", " +
                           std::to_string(to) + "]";
        if (!agrees) {
          line += " first mismatch at " + rep["first_mismatch"]["m"].dump() + " (" +
                  rep["first_mismatch"]["direction"].get<std::string>() + ")";
        }
        if (search) line += ", threshold " + rep["threshold"].dump();
        emit(g, line);
      }
      return (g.expect_agree && !agrees) ? kExitRefuted : kExitOk;
    }

    if (*sweep) {
      auto code = load_code(code_path);
      if (n_values.empty()) {
        if (n_max < n_min || n_max == 0) {
          throw ToolError(ULAM_ERR_PRECONDITION, "sweep needs --n or --n-min/--n-max");
        }
        n_values = class_members(n_min, n_max, modulus, residue);
      }
      char* jsonl = nullptr;
      char* csv = nullptr;
      size_t failures = 0;
      check(ulam_family_sweep(code.get(), a, modulus, residue, n_values.data(), n_values.size(),
                              seg_c, seg_d, g.flags(), g.threads, &jsonl, &csv, &failures));
      const std::string jl = take(jsonl);
      const std::string cs = take(csv);
      write_side(csv_out, cs);
      emit(g, as_csv ? cs : jl);
      return (g.expect_agree && failures > 0) ? kExitRefuted : kExitOk;
    }

    if (*mine) {
      if (modulus == 0 || residue >= modulus) {
        throw ToolError(ULAM_ERR_PRECONDITION, "mine needs 0 <= residue < modulus");
      }
      if (train.empty()) {
        if (n_max < n_min || n_max == 0) {
          throw ToolError(ULAM_ERR_PRECONDITION, "mine needs --train or --n-min/--n-max");
        }
        auto pool = class_members(std::max<std::uint64_t>(n_min, 2), n_max, modulus, residue);
        if (pool.size() < samples + holdout_count) {
          throw ToolError(ULAM_ERR_PRECONDITION, "range holds too few n in the residue class");
        }
        std::mt19937_64 rng(g.seed);
        std::shuffle(pool.begin(), pool.end(), rng);
        train.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(samples));
        if (holdout.empty()) {
          holdout.assign(pool.begin() + static_cast<std::ptrdiff_t>(samples),
                         pool.begin() + static_cast<std::ptrdiff_t>(samples + holdout_count));
        }
        std::sort(train.begin(), train.end());
        std::sort(holdout.begin(), holdout.end());
      }
      ulam_code* raw = nullptr;
      char* js = nullptr;
      check(ulam_mine(modulus, residue, train.data(), train.size(), holdout.data(), holdout.size(),
                      seg_c, seg_d, g.threads, &raw, &js));
      CodePtr code(raw);
      json result = json::parse(take(js));
      result["train"] = train;
      result["holdout"] = holdout;
      if (!code_out.empty()) {
        char* text = nullptr;
        check(ulam_code_encode(code.get(), &text));
        write_side(code_out, take(text));
      }
      bool all_agree = true;
      for (const auto& v : result["verification"]) {
        if (!v.contains("report") || !v["report"]["agrees"].get<bool>()) all_agree = false;
      }
      if (as_json) {
        emit(g, result.dump());
      } else {
        std::ostringstream os;
        os << "mined " << result["components"].size() << " components (code "
           << result["code_id"].get<std::string>() << ") from n = " << join(train, ",") << "\n";
        for (const auto& c : result["components"]) {
          os << "  [" << c["lo"]["slope"] << "n" << std::showpos << c["lo"]["intercept"].get<long long>()
             << std::noshowpos << ", " << c["hi"]["slope"] << "n" << std::showpos
             << c["hi"]["intercept"].get<long long>() << std::noshowpos << "]\n";
        }
        os << "held-out: " << (all_agree ? "all agree" : "DISAGREEMENT") << " on n = "
           << join(holdout, ",");
        emit(g, os.str());
      }
      return (g.expect_agree && !all_agree) ? kExitRefuted : kExitOk;
    }

    if (*export_ap || *export_pb) {
      auto p = obtain_prefix(g, a, b, horizon);
      const Fraction cov = parse_fraction(coverage);
      if (*export_pb) {
        char* text = nullptr;
        check(ulam_export_presburger(p.get(), min_periods, cov.num, cov.den, g.flags(), &text));
        emit(g, take(text));
        return kExitOk;
      }
      char* js = nullptr;
      check(ulam_export_ap(p.get(), min_periods, cov.num, cov.den, g.flags(), &js));
      if (!code_out.empty()) {
        ulam_code* raw = nullptr;
        check(ulam_export_ap_code(p.get(), min_periods, cov.num, cov.den, g.flags(),
                                  bounded ? 1 : 0, &raw));
        CodePtr code(raw);
        char* text = nullptr;
        check(ulam_code_encode(code.get(), &text));
        write_side(code_out, take(text));
      }
      emit(g, take(js));
      return kExitOk;
    }

    if (*hierarchy) {
      auto p = obtain_prefix(g, a, b, horizon);
      CodePtr code;
      if (!code_path.empty()) code = load_code(code_path);
      char* js = nullptr;
      check(ulam_hierarchy_report(p.get(), code.get(), g.flags(), &js));
      const std::string text = take(js);
      if (as_json) {
        emit(g, text);
      } else {
        const json h = json::parse(text);
        std::string out;
        for (const char* r : {"R1", "R2", "R3", "R4", "R5"}) {
          out += std::string(r) + ": " + h["status"][r].get<std::string>() + "\n";
        }
        for (const auto& note : h["notes"]) out += "note: " + note.get<std::string>() + "\n";
        emit(g, out);
      }
      return kExitOk;
    }

    if (*cache_info) {
      char* js = nullptr;
      check(ulam_cache_info(path.c_str(), &js));
      const std::string text = take(js);
      if (as_json) {
        emit(g, text);
      } else {
        const json h = json::parse(text);
        std::ostringstream os;
        os << "U(" << h["a"] << "," << h["b"] << ") horizon " << h["horizon"] << ", "
           << h["term_count"] << " terms, " << h["file_size"] << " bytes";
        emit(g, os.str());
      }
      return kExitOk;
    }

    if (*cache_write) {
      ulam_prefix* raw = nullptr;
      check(ulam_prefix_generate(a, b, horizon, &raw));
      PrefixPtr p(raw);
      check(ulam_cache_write(p.get(), path.c_str()));
      emit(g, "wrote " + path);
      return kExitOk;
    }
  } catch (const ToolError& e) {
    std::cerr << "error: " << ulam_status_name(e.status) << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
