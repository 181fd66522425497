/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ulam/miner.hpp"
#include "ulam/presburger.hpp"
#include "ulam/regularity.hpp"
#include "ulam/rigidity.hpp"

// JSON / CSV renderings of analysis results. Rationals are written as
// "num/den" strings with a float beside them for plotting; the string is the
// authoritative value.

namespace ulam::report {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const SegmentReport& r);
nlohmann::json to_json(const SweepEntry& e);
nlohmann::json to_json(const PeriodicityCandidate& c);
nlohmann::json to_json(const DensityEstimate& d);
nlohmann::json to_json(const DensityCheck& d);
nlohmann::json to_json(const ResidueCensus& c);
nlohmann::json to_json(const HierarchyReport& h);
nlohmann::json to_json(const APDecomposition& d);
nlohmann::json to_json(const MineResult& m);

/// One JSON object per line.
std::string sweep_jsonl(std::span<const SweepEntry> entries);

/// Header: n,first,last,agrees,first_mismatch,direction,error
std::string sweep_csv(std::span<const SweepEntry> entries);

/// Header: n,count,ratio. One row per n in `ns`, computed from the prefix.
std::string density_series_csv(const UlamPrefix& prefix, std::span<const std::uint64_t> ns);

}  // namespace ulam::report
