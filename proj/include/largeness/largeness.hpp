#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "largeness/finset.hpp"
#include "largeness/fundamental.hpp"
#include "largeness/growth.hpp"

namespace largeness {

inline bool is_large(const FinSet& xs, const Ordinal& a) { return fundamental_walk(a, xs).is_zero(); }

/// X minus its maximum is a-small; the empty set is at most a-large only for a = 0.
inline bool is_at_most_large(const FinSet& xs, const Ordinal& a) {
  if (xs.empty()) return a.is_zero();
  return !is_large(xs.without_max(), a);
}

inline bool is_exactly_large(const FinSet& xs, const Ordinal& a) {
  return is_large(xs, a) && is_at_most_large(xs, a);
}

/// Length of the shortest a-large prefix of X, if X is a-large at all.
inline std::optional<std::size_t> large_prefix_length(const FinSet& xs, Ordinal a) {
  if (a.is_zero()) return 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    a = fundamental_step(a, xs[i]);
    if (a.is_zero()) return i + 1;
  }
  return std::nullopt;
}

namespace detail {

// End of the shortest a-large run of consecutive integers starting at y.
// nullopt when the end would need more than cap_bits bits.
inline Capped interval_end(const Ordinal& a, const Nat& y, std::size_t cap_bits);

// Same for w^e * c.
inline Capped interval_end_power(const Ordinal& e, const Nat& c, const Nat& y, std::size_t cap_bits) {
  if (bit_length(y) > cap_bits) return std::nullopt;
  if (c.is_zero()) return y;
  if (e.is_zero()) return cap(y + c, cap_bits);
  if (e == Ordinal::finite(1)) {
    // z -> 2z + 1 applied c times.
    if (c > Nat(cap_bits)) return std::nullopt;
    return cap(((y + 1) << static_cast<unsigned>(c.convert_to<std::uint64_t>())) - 1, cap_bits);
  }
  // For e >= 2 one application already reaches 2^y.
  if (y >= Nat(cap_bits)) return std::nullopt;
  Nat z = y;
  for (Nat i = 0; i < c; ++i) {
    Capped next;
    if (e.is_successor()) {
      next = interval_end_power(predecessor(e), z, z + 1, cap_bits);
    } else {
      next = interval_end_power(fundamental_step(e, z), 1, z + 1, cap_bits);
    }
    if (!next) return std::nullopt;
    z = std::move(*next);
    if (i + 1 < c && z >= Nat(cap_bits)) return std::nullopt;
  }
  return z;
}

inline Capped interval_end(const Ordinal& a, const Nat& y, std::size_t cap_bits) {
  Capped z = y;
  const auto& terms = a.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    z = interval_end_power(it->exponent, it->coefficient, *z, cap_bits);
    if (!z) return std::nullopt;
  }
  return z;
}

}  // namespace detail

/// The least E with {y, y+1, ..., E-1} a-large, i.e. h_a(y) for h(x) = x + 1.
/// nullopt means E >= 2^cap_bits.
inline Capped large_interval_end(const Ordinal& a, const Nat& y, std::size_t cap_bits = 4096) {
  return detail::interval_end(a, y, cap_bits);
}

/// Is (x, y] a-large?
inline bool interval_is_large(const Nat& x, const Nat& y, const Ordinal& a) {
  if (a.is_zero()) return true;
  if (y <= x) return false;
  Capped end = large_interval_end(a, x + 1, bit_length(y) + 2);
  return end && *end <= y + 1;
}

/// Default ceiling on how many elements a materialized witness may have.
inline constexpr std::uint64_t default_element_budget = std::uint64_t{1} << 22;

/// The shortest a-large run {x0, x0+1, ...}. Raises InfeasibleScale when the
/// run would exceed `element_budget` elements.
inline FinSet minimal_large_suffix(const Nat& x0, const Ordinal& a,
                                   std::uint64_t element_budget = default_element_budget) {
  require(x0 >= 1, ErrorCode::PreconditionViolated, "minimal_large_suffix needs x0 >= 1");
  Capped end = large_interval_end(a, x0, bit_length(x0) + 64);
  if (!end || *end - x0 > Nat(element_budget))
    fail(ErrorCode::InfeasibleScale,
         "the shortest " + to_string(a) + "-large interval from " + x0.str() + " has " +
             (end ? Nat(*end - x0).str() : std::string("more than 2^64")) + " elements");
  FinSet out = FinSet::interval(x0, *end - 1);
  if (!is_exactly_large(out, a))
    fail(ErrorCode::CertificationFailed, "interval estimate disagrees with the walk");
  return out;
}

/// Sparsity, checked on consecutive pairs.
inline bool is_sparse(const FinSet& xs, const SparsityBound& bound) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const Nat& x = xs[i - 1];
    const Nat& y = xs[i];
    if (const auto* a = std::get_if<Ordinal>(&bound)) {
      if (!interval_is_large(x, y, *a)) return false;
    } else {
      Capped gx = std::get<GrowthFunction>(bound).eval(x, bit_length(y) + 2);
      if (!gx || !(y > *gx)) return false;
    }
  }
  return true;
}

/// The definition taken literally, over all pairs.
inline bool is_sparse_all_pairs(const FinSet& xs, const SparsityBound& bound) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!is_sparse(FinSet(std::vector<Nat>{xs[i], xs[j]}), bound)) return false;
  return true;
}

/// card X > g(min X).
inline bool is_omega_g_large(const FinSet& xs, const GrowthFunction& g) {
  require(!xs.empty(), ErrorCode::EmptySet, "omega-g-largeness of the empty set");
  Capped gx = g.eval(xs.min(), 64);
  return gx && Nat(xs.size()) > *gx;
}

/// Pairwise separated nonempty blocks X_0 < X_1 < ...
class BlockSequence {
 public:
  BlockSequence() = default;
  explicit BlockSequence(std::vector<FinSet> blocks) : blocks_(std::move(blocks)) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      require(!blocks_[i].empty(), ErrorCode::EmptySet, "blocks must be nonempty");
      if (i > 0)
        require(blocks_[i - 1].max() < blocks_[i].min(), ErrorCode::OverlappingBlocks,
                "blocks must be separated");
    }
  }

  const std::vector<FinSet>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const FinSet& operator[](std::size_t i) const { return blocks_[i]; }

  FinSet maxima() const {
    std::vector<Nat> out;
    for (const auto& b : blocks_) out.push_back(b.max());
    return FinSet(std::move(out));
  }

  FinSet united() const {
    std::vector<Nat> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return FinSet(std::move(out));
  }

  friend bool operator==(const BlockSequence&, const BlockSequence&) = default;

 private:
  std::vector<FinSet> blocks_;
};

/// A block sequence is a-large when the set of its block maxima is.
inline bool blocks_large(const BlockSequence& blocks, const Ordinal& a) {
  return is_large(blocks.maxima(), a);
}

}  // namespace largeness
