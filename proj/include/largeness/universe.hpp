#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "largeness/ordinal.hpp"

namespace largeness {

/// Canonical ordinals whose exponents come from `exponents`, with
/// coefficients in [1, max_coefficient] and at most `max_terms` terms.
/// Zero is included. The result is sorted increasingly.
inline std::vector<Ordinal> ordinal_universe(std::vector<Ordinal> exponents, unsigned max_coefficient,
                                             std::size_t max_terms) {
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  std::vector<Ordinal> out{Ordinal()};
  std::vector<Term> current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (current.size() == max_terms) return;
    for (std::size_t i = from; i < exponents.size(); ++i) {
      for (unsigned c = 1; c <= max_coefficient; ++c) {
        current.push_back(Term{exponents[i], Nat(c)});
        out.push_back(Ordinal::from_cnf(current));
        self(self, i + 1);
        current.pop_back();
      }
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Exponents {0, 1, 2, w, w+1, w*2, w^2}, coefficients <= 3, at most 3 terms.
inline std::vector<Ordinal> small_universe() {
  const Ordinal w = Ordinal::omega();
  const Ordinal one = Ordinal::finite(1);
  return ordinal_universe({Ordinal(), one, Ordinal::finite(2), w, ordinary_sum(w, one),
                           Ordinal::omega_power(one, 2), Ordinal::omega_power(Ordinal::finite(2))},
                          3, 3);
}

}  // namespace largeness
