#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "largeness/error.hpp"
#include "largeness/nat.hpp"

namespace largeness {

struct Term;

/// An ordinal below epsilon_0 in Cantor normal form.
///
/// The term list is immutable and shared, so copies are cheap and values can
/// be handed to other threads freely. Zero is the empty term list.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal finite(const Nat& n);
  static Ordinal omega_power(const Ordinal& exponent, const Nat& coefficient = 1);
  static Ordinal omega() { return omega_power(finite(1)); }

  /// Validates strictly decreasing exponents and positive coefficients.
  static Ordinal from_cnf(std::vector<Term> terms);

  /// Sorts and merges an arbitrary bag of terms; zero coefficients vanish.
  static Ordinal normalized(std::vector<Term> terms);

  const std::vector<Term>& terms() const;
  std::size_t size() const;

  bool is_zero() const noexcept { return rep_ == nullptr; }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }
  std::optional<Nat> as_finite() const;

  /// Exponent of the highest and of the lowest term; zero for zero.
  const Ordinal& leading_exponent() const;
  const Ordinal& trailing_exponent() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  struct Rep;
  explicit Ordinal(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static Ordinal adopt(std::vector<Term> terms);

  friend Ordinal ordinary_sum(const Ordinal&, const Ordinal&);
  friend Ordinal natural_sum(const Ordinal&, const Ordinal&);
  friend struct OrdinalAccess;

  std::shared_ptr<const Rep> rep_;
};

struct Term {
  Ordinal exponent;
  Nat coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Ordinal::Rep {
  std::vector<Term> terms;
  std::size_t hash = 0;
};

/// Library-internal constructor for term lists already known to be canonical.
struct OrdinalAccess {
  static Ordinal adopt(std::vector<Term> terms) { return Ordinal::adopt(std::move(terms)); }
};

inline Ordinal Ordinal::adopt(std::vector<Term> terms) {
  if (terms.empty()) return Ordinal();
  std::size_t h = terms.size();
  for (const auto& t : terms) {
    boost::hash_combine(h, t.exponent.hash());
    boost::hash_combine(h, boost::multiprecision::hash_value(t.coefficient));
  }
  auto rep = std::make_shared<Rep>();
  rep->terms = std::move(terms);
  rep->hash = h;
  return Ordinal(std::move(rep));
}

inline const std::vector<Term>& Ordinal::terms() const {
  static const std::vector<Term> empty;
  return rep_ ? rep_->terms : empty;
}

inline std::size_t Ordinal::size() const { return rep_ ? rep_->terms.size() : 0; }

inline std::size_t Ordinal::hash() const noexcept { return rep_ ? rep_->hash : 0x9e3779b9u; }

inline bool Ordinal::is_finite() const {
  return is_zero() || (size() == 1 && terms()[0].exponent.is_zero());
}

inline bool Ordinal::is_successor() const {
  return !is_zero() && terms().back().exponent.is_zero();
}

inline std::optional<Nat> Ordinal::as_finite() const {
  if (is_zero()) return Nat(0);
  if (!is_finite()) return std::nullopt;
  return terms()[0].coefficient;
}

inline const Ordinal& Ordinal::leading_exponent() const {
  static const Ordinal zero;
  return rep_ ? rep_->terms.front().exponent : zero;
}

inline const Ordinal& Ordinal::trailing_exponent() const {
  static const Ordinal zero;
  return rep_ ? rep_->terms.back().exponent : zero;
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.rep_ == b.rep_) return true;
  if (!a.rep_ || !b.rep_ || a.rep_->hash != b.rep_->hash) return false;
  return a.rep_->terms == b.rep_->terms;
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  const auto& x = a.terms();
  const auto& y = b.terms();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (x[i].coefficient != y[i].coefficient)
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

inline Ordinal Ordinal::finite(const Nat& n) {
  require(n >= 0, ErrorCode::NonCanonical, "negative natural");
  if (n.is_zero()) return Ordinal();
  return adopt({Term{Ordinal(), n}});
}

inline Ordinal Ordinal::omega_power(const Ordinal& exponent, const Nat& coefficient) {
  require(coefficient >= 0, ErrorCode::NonCanonical, "negative coefficient");
  if (coefficient.is_zero()) return Ordinal();
  return adopt({Term{exponent, coefficient}});
}

inline Ordinal Ordinal::from_cnf(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    require(terms[i].coefficient >= 1, ErrorCode::NonCanonical, "coefficients must be positive");
    if (i > 0)
      require(terms[i - 1].exponent > terms[i].exponent, ErrorCode::NonCanonical,
              "exponents must strictly decrease");
  }
  return adopt(std::move(terms));
}

inline Ordinal Ordinal::normalized(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  std::vector<Term> out;
  for (auto& t : terms) {
    require(t.coefficient >= 0, ErrorCode::NonCanonical, "negative coefficient");
    if (t.coefficient.is_zero()) continue;
    if (!out.empty() && out.back().exponent == t.exponent)
      out.back().coefficient += t.coefficient;
    else
      out.push_back(std::move(t));
  }
  return adopt(std::move(out));
}

/// Ordinary (non-commutative) ordinal addition.
inline Ordinal ordinary_sum(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  for (const auto& t : a.terms()) {
    if (t.exponent < lead) break;
    out.push_back(t);
  }
  auto rest = b.terms().begin();
  if (!out.empty() && out.back().exponent == lead) {
    out.back().coefficient += rest->coefficient;
    ++rest;
  }
  out.insert(out.end(), rest, b.terms().end());
  return Ordinal::adopt(std::move(out));
}

/// Hessenberg sum: coefficients added exponent by exponent.
inline Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    auto c = x[i].exponent <=> y[j].exponent;
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
    } else {
      out.push_back(Term{x[i].exponent, x[i].coefficient + y[j].coefficient});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
  return Ordinal::adopt(std::move(out));
}

/// b >> a: every exponent of b is at least every exponent of a.
inline bool much_greater(const Ordinal& b, const Ordinal& a) {
  if (a.is_zero() || b.is_zero()) return true;
  return b.trailing_exponent() >= a.leading_exponent();
}

inline Nat pseudo_norm(const Ordinal& a) {
  Nat best = 0;
  for (const auto& t : a.terms()) {
    best = std::max(best, t.coefficient);
    best = std::max(best, pseudo_norm(t.exponent));
  }
  return best;
}

/// Weight used to bound walk lengths: finite part counts once, every
/// infinite term twice. One fundamental step at an index >= 1 lowers it by
/// at most one, so an ordinal of weight w needs at least w steps to reach 0.
inline Nat walk_weight(const Ordinal& a) {
  Nat w = 0;
  for (const auto& t : a.terms()) w += t.exponent.is_zero() ? t.coefficient : 2 * t.coefficient;
  return w;
}

/// a = head + w^tail_exponent with head >> w^tail_exponent.
struct ShortCNF {
  Ordinal head;
  Ordinal tail_exponent;

  Ordinal recompose() const { return ordinary_sum(head, Ordinal::omega_power(tail_exponent)); }
  friend bool operator==(const ShortCNF&, const ShortCNF&) = default;
};

inline ShortCNF short_cnf(const Ordinal& a) {
  require(!a.is_zero(), ErrorCode::ZeroOrdinal, "short normal form of 0");
  std::vector<Term> head = a.terms();
  Ordinal tail = head.back().exponent;
  if (head.back().coefficient == 1)
    head.pop_back();
  else
    head.back().coefficient -= 1;
  return ShortCNF{OrdinalAccess::adopt(std::move(head)), std::move(tail)};
}

/// Returns (b', a') with b' >> a', b (+) a = b' + a', and
/// {b}(x) (+) a = {b'}(x) (+) a' for every x.
inline std::pair<Ordinal, Ordinal> split_for_natural_sum(const Ordinal& b, const Ordinal& a) {
  if (b.is_zero()) return {b, a};
  const Ordinal& cut = b.trailing_exponent();
  std::vector<Term> high, low;
  const Ordinal sum = natural_sum(b, a);
  for (const auto& t : sum.terms()) (t.exponent >= cut ? high : low).push_back(t);
  return {OrdinalAccess::adopt(std::move(high)), OrdinalAccess::adopt(std::move(low))};
}

}  // namespace largeness

template <>
struct std::hash<largeness::Ordinal> {
  std::size_t operator()(const largeness::Ordinal& a) const noexcept { return a.hash(); }
};
