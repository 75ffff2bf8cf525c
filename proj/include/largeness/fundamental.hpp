#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "largeness/finset.hpp"
#include "largeness/ordinal.hpp"

namespace largeness {

/// a - 1 for a successor ordinal a.
inline Ordinal predecessor(const Ordinal& a) {
  require(a.is_successor(), ErrorCode::PreconditionViolated, "predecessor of a non-successor");
  std::vector<Term> terms = a.terms();
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  return OrdinalAccess::adopt(std::move(terms));
}

/// {a}(x).
inline Ordinal fundamental_step(const Ordinal& a, const Nat& x) {
  if (a.is_zero()) return a;
  std::vector<Term> terms = a.terms();
  Ordinal gamma = terms.back().exponent;
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  if (gamma.is_zero()) {
    // a = head + 1
  } else if (gamma.is_successor()) {
    if (!x.is_zero()) terms.push_back(Term{predecessor(gamma), x});
  } else {
    terms.push_back(Term{fundamental_step(gamma, x), Nat(1)});
  }
  return OrdinalAccess::adopt(std::move(terms));
}

/// {a}(X): the left fold of fundamental_step over X in increasing order.
inline Ordinal fundamental_walk(Ordinal a, const FinSet& xs) {
  for (const auto& x : xs) {
    if (a.is_zero()) break;
    a = fundamental_step(a, x);
  }
  return a;
}

namespace detail {

inline bool arrow_power(const Ordinal& g, const Ordinal& delta, const Nat& x);

inline Ordinal tail_terms(const Ordinal& a, std::size_t from) {
  const auto& t = a.terms();
  return OrdinalAccess::adopt(std::vector<Term>(t.begin() + static_cast<std::ptrdiff_t>(from), t.end()));
}

}  // namespace detail

/// b =>_x a: a occurs in b, {b}(x), {{b}(x)}(x), ...
///
/// Decided from the shape of the normal forms rather than by walking the
/// sequence, which can be astronomically long even for tiny inputs.
inline bool arrow(const Ordinal& b, const Ordinal& a, const Nat& x) {
  if (a == b) return true;
  if (a > b) return false;
  const auto& bt = b.terms();
  const auto& at = a.terms();
  std::size_t i = 0;
  while (i < at.size() && at[i] == bt[i]) ++i;
  // a < b and they share the first i terms.
  if (i == at.size()) return true;  // a is a truncation of b, reached once the tail is used up
  const Term& ta = at[i];
  const Term& tb = bt[i];
  if (ta.exponent == tb.exponent) {
    // a = P + w^e * j + delta with j < c: reached iff delta lies on the chain of w^e.
    if (i + 1 == at.size()) return true;
    return detail::arrow_power(tb.exponent, detail::tail_terms(a, i + 1), x);
  }
  return detail::arrow_power(tb.exponent, detail::tail_terms(a, i), x);
}

namespace detail {

/// Is delta (0 < delta < w^g) on the fundamental chain of w^g at x?
inline bool arrow_power(const Ordinal& g, const Ordinal& delta, const Nat& x) {
  const Term& lead = delta.terms().front();
  const Ordinal& d = lead.exponent;
  const Nat& j = lead.coefficient;
  const bool single = delta.size() == 1;
  if (x.is_zero()) {
    // At index 0 a successor exponent collapses w^e to 0, a limit one moves to w^{e}(0).
    Ordinal e = g;
    while (e.is_limit()) {
      e = fundamental_step(e, x);
      if (e == d) return single && j == 1;
      if (e < d) return false;
    }
    return false;
  }
  const Ordinal d1 = ordinary_sum(d, Ordinal::finite(1));
  if (arrow(g, d1, x)) {
    // The chain passes through w^{d+1}, then w^d * x, w^d * (x-1) + ..., down to 0.
    if (j < x) return single || arrow_power(d, tail_terms(delta, 1), x);
    return j == x && single;
  }
  if (arrow(g, d, x)) return single && j == 1;
  return false;
}

}  // namespace detail

/// Reference implementation by plain iteration. Returns nullopt when the
/// chain is longer than max_steps.
inline std::optional<bool> arrow_by_iteration(Ordinal b, const Ordinal& a, const Nat& x,
                                              std::uint64_t max_steps) {
  for (std::uint64_t steps = 0;; ++steps) {
    if (b == a) return true;
    if (b < a) return false;
    if (steps == max_steps) return std::nullopt;
    b = fundamental_step(b, x);
  }
}

}  // namespace largeness
