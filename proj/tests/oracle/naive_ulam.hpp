/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Reference Ulam generator written straight from the definition: every
// candidate m is tested by counting unordered pairs of distinct earlier terms
// with a two-pointer walk. Quadratic overall and deliberately unclever.

#include <cstdint>
#include <vector>

namespace oracle {

inline std::uint64_t pair_count(const std::vector<std::uint64_t>& terms, std::uint64_t m) {
  if (terms.empty()) return 0;
  std::size_t i = 0;
  std::size_t j = terms.size() - 1;
  std::uint64_t count = 0;
  while (i < j) {
    const std::uint64_t s = terms[i] + terms[j];
    if (s == m) {
      ++count;
      ++i;
      --j;
    } else if (s < m) {
      ++i;
    } else {
      --j;
    }
  }
  return count;
}

inline std::vector<std::uint64_t> naive_ulam(std::uint64_t a, std::uint64_t b,
                                             std::uint64_t horizon) {
  std::vector<std::uint64_t> terms;
  if (a <= horizon) terms.push_back(a);
  if (b <= horizon) terms.push_back(b);
  for (std::uint64_t m = b + 1; m <= horizon; ++m) {
    if (pair_count(terms, m) == 1) terms.push_back(m);
  }
  return terms;
}

}  // namespace oracle
