/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ulam/report.hpp"

#include <sstream>

namespace ulam::report {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const Rational& r) { return json{{"exact", r.str()}, {"value", r.to_double()}}; }

json to_json(const SegmentReport& r) {
  json mismatch = nullptr;
  if (r.first_mismatch) {
    mismatch = json{{"m", r.first_mismatch->m}, {"direction", to_string(r.first_mismatch->kind)}};
  }
  return json{{"a", r.params.a()},
              {"b", r.params.b()},
              {"code_id", r.code_id},
              {"range", {r.first, r.last}},
              {"agrees", r.agrees},
              {"status", r.agrees ? "verified-on-segment" : "refuted-on-segment"},
              {"first_mismatch", mismatch},
              {"matched_count", r.matched_count}};
}

json to_json(const SweepEntry& e) {
  json out{{"n", e.n}};
  if (e.report) out["report"] = to_json(*e.report);
  if (e.error) {
    out["error"] = ulam::to_string(*e.error);
    out["message"] = e.message;
  }
  return out;
}

json to_json(const PeriodicityCandidate& c) {
  return json{{"threshold", c.threshold},
              {"period", c.period},
              {"period_gaps", c.period_gaps},
              {"period_sum", c.period_sum},
              {"periods_observed", c.periods_observed},
              {"coverage", to_json(c.coverage)},
              {"density", to_json(density_from_period(c))},
              {"grade", "candidate-grade"}};
}

json to_json(const DensityEstimate& d) {
  return json{{"n", d.n}, {"count", d.count}, {"ratio", to_json(d.ratio)}};
}

json to_json(const DensityCheck& d) {
  return json{{"holds", d.holds}, {"first_violation", opt(d.first_violation)}};
}

json to_json(const ResidueCensus& c) {
  return json{{"modulus", c.modulus},
              {"residue", c.residue},
              {"count", c.count},
              {"largest", opt(c.largest)},
              {"free_tail_from", opt(c.free_tail_from)}};
}

json to_json(const HierarchyReport& h) {
  json out{{"a", h.params.a()},
           {"b", h.params.b()},
           {"horizon", h.horizon},
           {"status",
            {{"R1", to_string(h.r1)},
             {"R2", to_string(h.r2)},
             {"R3", to_string(h.r3)},
             {"R4", to_string(h.r4)},
             {"R5", to_string(h.r5)}}},
           {"max_gap", h.max_gap},
           {"max_gap_first_half", h.max_gap_first_half},
           {"empirical_density", to_json(h.empirical)},
           {"notes", h.notes}};
  out["code_id"] = opt(h.code_id);
  out["rigidity_threshold"] = opt(h.rigidity_threshold);
  out["candidate"] = h.candidate ? to_json(*h.candidate) : json(nullptr);
  out["density"] = h.density ? to_json(*h.density) : json(nullptr);
  out["lower_density_bound"] = h.lower_density_bound ? to_json(*h.lower_density_bound) : json(nullptr);
  return out;
}

json to_json(const APDecomposition& d) {
  json progs = json::array();
  for (const auto& pr : d.progressions) progs.push_back({{"first", pr.first}, {"diff", pr.diff}});
  return json{{"a", d.params.a()},
              {"b", d.params.b()},
              {"horizon", d.horizon},
              {"initial_set", d.initial_set},
              {"progressions", std::move(progs)},
              {"density", to_json(effective_density(d))},
              {"candidate", to_json(d.candidate)},
              {"grade", "candidate-grade"}};
}

json to_json(const MineResult& m) {
  json comps = json::array();
  for (const auto& c : m.fit.components) {
    comps.push_back({{"run_index", c.run_index},
                     {"lo", {{"slope", c.slope_lo}, {"intercept", c.intercept_lo}}},
                     {"hi", {{"slope", c.slope_hi}, {"intercept", c.intercept_hi}}},
                     {"verified_on", c.verified_on}});
  }
  json checks = json::array();
  for (const auto& e : m.verification) checks.push_back(to_json(e));
  return json{{"code", json::parse(encode(m.code))},
              {"code_id", code_id(m.code)},
              {"components", std::move(comps)},
              {"verification", std::move(checks)}};
}

std::string sweep_jsonl(std::span<const SweepEntry> entries) {
  std::string out;
  for (const auto& e : entries) {
    out += to_json(e).dump();
    out += '\n';
  }
  return out;
}

std::string sweep_csv(std::span<const SweepEntry> entries) {
  std::ostringstream os;
  os << "n,first,last,agrees,first_mismatch,direction,error\n";
  for (const auto& e : entries) {
    os << e.n << ',';
    if (e.report) {
      const auto& r = *e.report;
      os << r.first << ',' << r.last << ',' << (r.agrees ? "true" : "false") << ',';
      if (r.first_mismatch) {
        os << r.first_mismatch->m << ',' << to_string(r.first_mismatch->kind);
      } else {
        os << ',';
      }
      os << ',';
    } else {
      os << ",,,,,";
    }
    if (e.error) os << ulam::to_string(*e.error);
    os << '\n';
  }
  return os.str();
}

std::string density_series_csv(const UlamPrefix& prefix, std::span<const std::uint64_t> ns) {
  std::ostringstream os;
  os << "n,count,ratio\n";
  os.precision(10);
  for (std::uint64_t n : ns) {
    const DensityEstimate d = empirical_density(prefix, n);
    os << n << ',' << d.count << ',' << d.ratio.to_double() << '\n';
  }
  return os.str();
}

}  // namespace ulam::report
