/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Independent reader for the exported additive formulas:
//
//   formula   ::= "⊥" | disjunct { " ∨ " disjunct }
//   disjunct  ::= "x = " nat | "∃t (x = " nat " + " nat "·t)"
//
// Parsing is strict; any other byte sequence throws. Evaluation decides
// whether a natural number satisfies the parsed disjunction with t >= 0.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

struct Disjunct {
  bool progression = false;
  std::uint64_t base = 0;
  std::uint64_t step = 0;
};

class Formula {
 public:
  static Formula parse(std::string_view text) {
    Formula f;
    Reader r{text};
    if (r.eat("⊥")) {
      r.expect_end();
      return f;
    }
    for (;;) {
      f.parts_.push_back(r.disjunct());
      if (r.done()) break;
      r.expect(" ∨ ");
    }
    return f;
  }

  bool holds(std::uint64_t x) const {
    for (const auto& d : parts_) {
      if (!d.progression && x == d.base) return true;
      if (d.progression && x >= d.base && d.step > 0 && (x - d.base) % d.step == 0) return true;
      if (d.progression && d.step == 0 && x == d.base) return true;
    }
    return false;
  }

  const std::vector<Disjunct>& parts() const { return parts_; }

 private:
  struct Reader {
    std::string_view s;
    std::size_t i = 0;

    bool done() const { return i == s.size(); }
    bool eat(std::string_view tok) {
      if (s.substr(i, tok.size()) == tok) {
        i += tok.size();
        return true;
      }
      return false;
    }
    void expect(std::string_view tok) {
      if (!eat(tok)) {
        throw std::runtime_error("formula: expected '" + std::string(tok) + "' at byte " +
                                 std::to_string(i));
      }
    }
    void expect_end() const {
      if (!done()) throw std::runtime_error("formula: trailing input at byte " + std::to_string(i));
    }
    std::uint64_t nat() {
      const std::size_t start = i;
      std::uint64_t v = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        ++i;
      }
      if (i == start) throw std::runtime_error("formula: digit expected at byte " + std::to_string(i));
      return v;
    }
    Disjunct disjunct() {
      Disjunct d;
      if (eat("x = ")) {
        d.base = nat();
        return d;
      }
      expect("∃t (x = ");
      d.progression = true;
      d.base = nat();
      expect(" + ");
      d.step = nat();
      expect("·t)");
      return d;
    }
  };

  std::vector<Disjunct> parts_;
};

}  // namespace oracle
