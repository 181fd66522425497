/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ulam/pattern.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "ulam/checked.hpp"
#include "ulam/error.hpp"

namespace ulam {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxEnumerated = std::size_t{1} << 27;

std::int64_t linear(std::int64_t c1, std::int64_t c2, std::int64_t c0, std::int64_t a,
                    std::int64_t b) {
  return checked::add(checked::add(checked::mul(c1, a), checked::mul(c2, b)), c0);
}

bool mask_admits(const PatternComponent& comp, std::int64_t offset) {
  const auto r = static_cast<std::uint64_t>(
      checked::emod(offset, checked::narrow<std::int64_t>(comp.L)));
  return std::binary_search(comp.S.begin(), comp.S.end(), r);
}

}  // namespace

void validate(const PatternComponent& comp) {
  if (comp.L == 0) throw Error(ErrorCode::malformed_code, "mask period L must be >= 1");
  if (comp.L > static_cast<std::uint64_t>(INT64_MAX)) {
    throw Error(ErrorCode::malformed_code, "mask period L too large");
  }
  for (std::size_t i = 0; i < comp.S.size(); ++i) {
    if (comp.S[i] >= comp.L) {
      throw Error(ErrorCode::malformed_code, "mask element " + std::to_string(comp.S[i]) +
                                                 " not below L=" + std::to_string(comp.L));
    }
    if (i > 0 && comp.S[i] <= comp.S[i - 1]) {
      throw Error(ErrorCode::malformed_code, "mask set S must be strictly ascending");
    }
  }
}

void validate(const PatternCode& code) {
  for (const auto& comp : code.components) validate(comp);
  if (code.applicability) {
    const auto& ap = *code.applicability;
    if (ap.modulus == 0 || ap.residue >= ap.modulus) {
      throw Error(ErrorCode::malformed_code, "applicability needs 0 <= residue < modulus");
    }
  }
}

Endpoints eval_endpoints(const PatternComponent& comp, std::int64_t a, std::int64_t b) {
  Endpoints out;
  out.A = linear(comp.A1, comp.A2, comp.p, a, b);
  if (!comp.unbounded) out.B = linear(comp.B1, comp.B2, comp.q, a, b);
  return out;
}

bool in_component(const PatternComponent& comp, std::int64_t a, std::int64_t b, std::int64_t m) {
  const Endpoints e = eval_endpoints(comp, a, b);
  if (m < e.A) return false;
  if (e.B && m > *e.B) return false;
  return mask_admits(comp, checked::sub(m, e.A));
}

bool in_pattern(const PatternCode& code, std::int64_t a, std::int64_t b, std::int64_t m) {
  for (const auto& comp : code.components) {
    if (in_component(comp, a, b, m)) return true;
  }
  return false;
}

std::vector<std::int64_t> pattern_set(const PatternCode& code, std::int64_t a, std::int64_t b) {
  std::vector<std::int64_t> out;
  for (const auto& comp : code.components) {
    if (comp.unbounded) {
      throw Error(ErrorCode::unbounded_pattern, "pattern_set needs bounded components");
    }
  }
  for (const auto& comp : code.components) {
    const Endpoints e = eval_endpoints(comp, a, b);
    const std::int64_t lo = std::max<std::int64_t>(e.A, 0);
    const std::int64_t hi = *e.B;
    if (lo > hi) continue;
    if (static_cast<std::uint64_t>(hi - lo) >= kMaxEnumerated - out.size()) {
      throw Error(ErrorCode::horizon_too_large, "pattern set too large to enumerate");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo);
    for (std::uint64_t off = 0; off <= span; ++off) {
      const std::int64_t m = lo + static_cast<std::int64_t>(off);
      if (mask_admits(comp, checked::sub(m, e.A))) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BMax b_max(const PatternCode& code, std::int64_t a, std::int64_t b) {
  BMax out;
  for (const auto& comp : code.components) {
    if (comp.unbounded) {
      out.has_unbounded = true;
      continue;
    }
    const std::int64_t B = linear(comp.B1, comp.B2, comp.q, a, b);
    out.value = out.value ? std::max(*out.value, B) : B;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical text: nlohmann::json objects keep keys sorted, and dump() with
// no indent emits no whitespace, so equal codes always encode identically.

std::string encode(const PatternCode& code) {
  validate(code);
  json comps = json::array();
  for (const auto& c : code.components) {
    comps.push_back(json{{"A1", c.A1}, {"A2", c.A2}, {"B1", c.B1}, {"B2", c.B2},
                         {"p", c.p},   {"q", c.q},   {"L", c.L},   {"S", c.S},
                         {"unbounded", c.unbounded}});
  }
  json doc{{"components", std::move(comps)}};
  if (code.applicability) {
    doc["applicability"] = json{{"modulus", code.applicability->modulus},
                                {"residue", code.applicability->residue}};
  }
  return doc.dump();
}

namespace {

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::malformed_code, std::string("missing field '") + key + "'");
  }
  return *it;
}

std::int64_t get_signed(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (v.is_number_integer() && !(v.is_number_unsigned() && v.get<std::uint64_t>() > INT64_MAX)) {
    return v.get<std::int64_t>();
  }
  throw Error(ErrorCode::malformed_code, std::string("field '") + key + "' must be a 64-bit integer");
}

std::uint64_t get_unsigned(const json& v, const std::string& what) {
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    return v.get<std::uint64_t>();
  }
  throw Error(ErrorCode::malformed_code, what + " must be a nonnegative integer");
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return it.key() == k; })) {
      throw Error(ErrorCode::malformed_code, "unknown field '" + it.key() + "'");
    }
  }
}

}  // namespace

PatternCode decode(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("pattern code: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw Error(ErrorCode::malformed_code, "pattern code must be an object");
  reject_unknown(doc, {"components", "applicability"});

  PatternCode code;
  const json& comps = field(doc, "components");
  if (!comps.is_array()) throw Error(ErrorCode::malformed_code, "'components' must be an array");
  for (const json& c : comps) {
    if (!c.is_object()) throw Error(ErrorCode::malformed_code, "component must be an object");
    reject_unknown(c, {"A1", "A2", "B1", "B2", "p", "q", "L", "S", "unbounded"});
    PatternComponent comp;
    comp.A1 = get_signed(c, "A1");
    comp.A2 = get_signed(c, "A2");
    comp.B1 = get_signed(c, "B1");
    comp.B2 = get_signed(c, "B2");
    comp.p = get_signed(c, "p");
    comp.q = get_signed(c, "q");
    comp.L = get_unsigned(field(c, "L"), "L");
    const json& s = field(c, "S");
    if (!s.is_array()) throw Error(ErrorCode::malformed_code, "'S' must be an array");
    comp.S.clear();
    for (const json& e : s) comp.S.push_back(get_unsigned(e, "mask element"));
    const json& ub = field(c, "unbounded");
    if (!ub.is_boolean()) throw Error(ErrorCode::malformed_code, "'unbounded' must be a boolean");
    comp.unbounded = ub.get<bool>();
    code.components.push_back(std::move(comp));
  }
  if (auto it = doc.find("applicability"); it != doc.end()) {
    if (!it->is_object()) throw Error(ErrorCode::malformed_code, "'applicability' must be an object");
    reject_unknown(*it, {"modulus", "residue"});
    code.applicability = Applicability{get_unsigned(field(*it, "modulus"), "modulus"),
                                       get_unsigned(field(*it, "residue"), "residue")};
  }
  validate(code);
  return code;
}

std::string code_id(const PatternCode& code) {
  // FNV-1a over the canonical text.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : encode(code)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ulam
