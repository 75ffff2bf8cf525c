#pragma once

#include <optional>
#include <string>
#include <vector>

#include "largeness/largeness.hpp"
#include "largeness/ordinal_io.hpp"

namespace largeness {

/// w^n * k for naturals n, k.
inline Ordinal omega_pow(unsigned long long n, const Nat& k = 1) {
  return Ordinal::omega_power(Ordinal::finite(Nat(n)), k);
}

/// The shortest a-large prefix of X.
inline std::optional<FinSet> minimal_large_prefix(const FinSet& xs, const Ordinal& a) {
  auto len = large_prefix_length(xs, a);
  if (!len) return std::nullopt;
  return xs.prefix(*len);
}

/// `count` consecutive minimal a-large prefixes, each taken from what the
/// previous ones left over. The remainder is returned separately.
struct GreedyBlocks {
  std::vector<FinSet> blocks;
  FinSet rest;
};

inline std::optional<GreedyBlocks> greedy_blocks(FinSet xs, const Ordinal& a, std::size_t count) {
  GreedyBlocks out;
  for (std::size_t i = 0; i < count; ++i) {
    auto len = large_prefix_length(xs, a);
    if (!len || *len == 0) return std::nullopt;
    out.blocks.push_back(xs.prefix(*len));
    xs = xs.suffix_from(*len);
  }
  out.rest = std::move(xs);
  return out;
}

/// If B is at most b-large and C at most c-large, B u C should be at most
/// (b (+) c)-large. Returns whether it is.
inline bool check_union_bound(const FinSet& B, const FinSet& C, const Ordinal& b, const Ordinal& c) {
  require(is_at_most_large(B, b), ErrorCode::PreconditionViolated,
          to_string(B) + " is not at most " + to_string(b) + "-large");
  require(is_at_most_large(C, c), ErrorCode::PreconditionViolated,
          to_string(C) + " is not at most " + to_string(c) + "-large");
  return is_at_most_large(set_union(B, C), natural_sum(b, c));
}

struct SplitWitness {
  FinSet left;
  FinSet right;

  friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

/// X (a (+) b)-large: the exactly a-large prefix, and the rest, which is b-large.
inline SplitWitness split(const FinSet& xs, const Ordinal& a, const Ordinal& b) {
  require(is_large(xs, natural_sum(a, b)), ErrorCode::NotLargeEnough,
          to_string(xs) + " is not " + to_string(natural_sum(a, b)) + "-large");
  auto len = large_prefix_length(xs, a);
  certify(len.has_value(), "no a-large prefix inside an (a (+) b)-large set");
  SplitWitness w{xs.prefix(*len), xs.suffix_from(*len)};
  certify(is_exactly_large(w.left, a), "split: left part is not exactly large");
  certify(is_large(w.right, b), "split: right part is not large");
  return w;
}

enum class PigeonholeVerdict { LeftLarge, RightLarge, BothExact };

inline std::string to_string(PigeonholeVerdict v) {
  switch (v) {
    case PigeonholeVerdict::LeftLarge: return "left-large";
    case PigeonholeVerdict::RightLarge: return "right-large";
    case PigeonholeVerdict::BothExact: return "both-exact";
  }
  return "unknown";
}

/// X0 u X1 (a (+) b)-large. LeftLarge: X0 minus its max is a-large;
/// RightLarge: X1 minus its max is b-large; BothExact: X0 exactly a-large
/// and X1 exactly b-large.
inline PigeonholeVerdict pigeonhole_v1(const FinSet& x0, const FinSet& x1, const Ordinal& a, const Ordinal& b) {
  require(is_large(set_union(x0, x1), natural_sum(a, b)), ErrorCode::NotLargeEnough,
          "pigeonhole: the union is not " + to_string(natural_sum(a, b)) + "-large");
  if (!x0.empty() && is_large(x0.without_max(), a)) return PigeonholeVerdict::LeftLarge;
  if (!x1.empty() && is_large(x1.without_max(), b)) return PigeonholeVerdict::RightLarge;
  certify(is_exactly_large(x0, a) && is_exactly_large(x1, b),
          "pigeonhole: no alternative holds for " + to_string(x0) + ", " + to_string(x1));
  return PigeonholeVerdict::BothExact;
}

/// X0 u X1 u {star} (a (+) b)-large with star above both: X0 is a-large or X1 is b-large.
inline PigeonholeVerdict pigeonhole_v2(const FinSet& x0, const FinSet& x1, const Nat& star, const Ordinal& a,
                                       const Ordinal& b) {
  const FinSet both = set_union(x0, x1);
  require(both.empty() || star > both.max(), ErrorCode::BadStar,
          "star " + star.str() + " must exceed every element");
  require(is_large(both.with(star), natural_sum(a, b)), ErrorCode::NotLargeEnough,
          "pigeonhole: the union with the star is not " + to_string(natural_sum(a, b)) + "-large");
  if (is_large(x0, a)) return PigeonholeVerdict::LeftLarge;
  if (is_large(x1, b)) return PigeonholeVerdict::RightLarge;
  fail(ErrorCode::CertificationFailed, "pigeonhole: neither side is large for " + to_string(x0) + ", " + to_string(x1));
}

/// Union of w^n-large blocks whose maxima form a w^m-large set; the result is w^(n+m)-large.
inline FinSet construct(const BlockSequence& blocks, unsigned n, unsigned m) {
  for (const auto& b : blocks.blocks())
    require(is_large(b, omega_pow(n)), ErrorCode::PreconditionViolated,
            "block " + to_string(b) + " is not " + to_string(omega_pow(n)) + "-large");
  require(blocks_large(blocks, omega_pow(m)), ErrorCode::PreconditionViolated,
          "block maxima are not " + to_string(omega_pow(m)) + "-large");
  FinSet out = blocks.united();
  certify(is_large(out, omega_pow(n + m)), "construct: union is not large");
  return out;
}

namespace detail {

// Induction on m. Blocks are the minimal large prefixes available; the last
// block is carried into the next round, as in the proof.
inline std::vector<FinSet> deconstruct_rec(const FinSet& xs, unsigned n, unsigned m) {
  const Ordinal wn = omega_pow(n);
  auto first = greedy_blocks(xs, wn, 1);
  if (!first) fail(ErrorCode::NotLargeEnough, "deconstruct: no w^n-large block left");
  FinSet a = first->blocks[0];
  FinSet b = first->rest;
  if (m == 0) {
    if (!is_large(b, wn)) fail(ErrorCode::NotLargeEnough, "deconstruct: second block is not w^n-large");
    return {a, b};
  }
  if (b.empty()) fail(ErrorCode::NotLargeEnough, "deconstruct: nothing after the first block");
  const Nat& mb = b.min();
  require(fits_u64(mb) && mb <= Nat(default_element_budget), ErrorCode::InfeasibleScale,
          "deconstruct: min B is too large to enumerate blocks");
  const std::size_t count = static_cast<std::size_t>(to_u64(mb));
  auto zs = greedy_blocks(b.without_min(), omega_pow(n + m - 1), count);
  if (!zs) fail(ErrorCode::NotLargeEnough, "deconstruct: fewer than min B large blocks");
  std::vector<FinSet> out{a};
  FinSet carry = zs->blocks[0];
  for (std::size_t i = 1; i < count; ++i) {
    std::vector<FinSet> inner = deconstruct_rec(set_union(carry, zs->blocks[i]), n, m - 1);
    carry = inner.back();
    inner.pop_back();
    out.insert(out.end(), inner.begin(), inner.end());
  }
  out.push_back(carry);
  return out;
}

}  // namespace detail

/// X (w^(n+m) + w^n)-large: blocks X_0 < ... < X_d, each w^n-large, whose
/// first d maxima form a w^m-large set.
inline BlockSequence deconstruct(const FinSet& xs, unsigned n, unsigned m) {
  const Ordinal need = ordinary_sum(omega_pow(n + m), omega_pow(n));
  require(is_large(xs, need), ErrorCode::NotLargeEnough, to_string(xs) + " is not " + to_string(need) + "-large");
  BlockSequence out(detail::deconstruct_rec(xs, n, m));
  for (const auto& b : out.blocks()) certify(is_large(b, omega_pow(n)), "deconstruct: block is not large");
  certify(is_large(out.maxima().without_max(), omega_pow(m)), "deconstruct: maxima are not large");
  certify(out.united().is_subset_of(xs), "deconstruct: blocks leave X");
  return out;
}

/// Residue class of index mod k that is large for `target`; the first class
/// found, scanning colors in increasing order.
inline std::optional<std::vector<std::size_t>> large_residue_class(const FinSet& zs, std::size_t k,
                                                                   const Ordinal& target) {
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::size_t> idx;
    std::vector<Nat> pts;
    for (std::size_t i = c; i < zs.size(); i += k) {
      idx.push_back(i);
      pts.push_back(zs[i]);
    }
    if (is_large(FinSet(std::move(pts)), target)) return idx;
  }
  return std::nullopt;
}

/// X (w^(n+m) * (kl+1))-large with k(l+1) <= min X: blocks, each w^n*k-large,
/// whose maxima form a w^m*l-large set.
inline BlockSequence deconstruct_general(const FinSet& xs, unsigned n, unsigned m, unsigned k, unsigned l) {
  require(n >= 1 && k >= 1 && l >= 1, ErrorCode::PreconditionViolated, "n, k, l must be positive");
  require(!xs.empty() && Nat(k) * (l + 1) <= xs.min(), ErrorCode::MinTooSmall,
          "min X must be at least k(l+1) = " + std::to_string(k * (l + 1)));
  const Ordinal need = omega_pow(n + m, Nat(k) * l + 1);
  require(is_large(xs, need), ErrorCode::NotLargeEnough, to_string(xs) + " is not " + to_string(need) + "-large");
  const Ordinal wn = omega_pow(n);
  std::vector<FinSet> out;
  if (m == 0) {
    auto parts = greedy_blocks(xs, wn, std::size_t{k} * l);
    certify(parts.has_value(), "deconstruct_general: too few w^n-large blocks");
    for (unsigned i = 0; i < l; ++i) {
      FinSet z;
      for (unsigned j = 0; j < k; ++j) z = set_union(z, parts->blocks[i * k + j]);
      out.push_back(std::move(z));
    }
  } else {
    auto head = greedy_blocks(xs, omega_pow(n, k), 1);
    certify(head.has_value(), "deconstruct_general: no w^n*k-large head");
    auto parts = greedy_blocks(head->rest, ordinary_sum(omega_pow(n + m), wn), std::size_t{k} * l);
    if (!parts) fail(ErrorCode::NotLargeEnough, "deconstruct_general: too few (w^(n+m) + w^n)-large parts");
    std::vector<FinSet> ws;
    for (const auto& part : parts->blocks) {
      BlockSequence inner = deconstruct(part, n, m);
      ws.insert(ws.end(), inner.blocks().begin(), inner.blocks().end() - 1);
    }
    std::vector<Nat> maxima;
    for (const auto& w : ws) maxima.push_back(w.max());
    auto chosen = large_residue_class(FinSet(std::move(maxima)), k, omega_pow(m, l));
    certify(chosen.has_value(), "deconstruct_general: no residue class is w^m*l-large");
    std::size_t prev = 0;
    for (std::size_t s = 0; s < chosen->size(); ++s) {
      const std::size_t is = (*chosen)[s];
      FinSet h;
      if (s == 0) {
        h = set_union(head->blocks[0], ws[is]);
      } else {
        for (std::size_t j = prev + 1; j <= is; ++j) h = set_union(h, ws[j]);
      }
      out.push_back(std::move(h));
      prev = is;
    }
  }
  BlockSequence blocks(std::move(out));
  for (const auto& b : blocks.blocks()) certify(is_large(b, omega_pow(n, k)), "deconstruct_general: block is not large");
  certify(blocks_large(blocks, omega_pow(m, l)), "deconstruct_general: maxima are not large");
  return blocks;
}

/// X w^(m+3)-large with 3l+2 <= min X: a (w^2*3)-sparse (w^m*l + 1)-large subset.
inline FinSet sparse_large_subset(const FinSet& xs, unsigned m, unsigned l) {
  require(l >= 1, ErrorCode::PreconditionViolated, "l must be positive");
  require(!xs.empty() && Nat(3) * l + 2 <= xs.min(), ErrorCode::MinTooSmall,
          "min X must be at least 3l+2 = " + std::to_string(3 * l + 2));
  require(is_large(xs, omega_pow(m + 3)), ErrorCode::NotLargeEnough,
          to_string(xs) + " is not " + to_string(omega_pow(m + 3)) + "-large");
  auto ab = greedy_blocks(xs.without_min(), omega_pow(m + 2), 1);
  certify(ab.has_value(), "sparse_large_subset: no w^(m+2)-large block");
  BlockSequence blocks = deconstruct_general(ab->rest, 2, m, 3, l);
  FinSet out = blocks.maxima().with(xs.min());
  const Ordinal target = ordinary_sum(omega_pow(m, l), Ordinal::finite(1));
  certify(is_sparse(out, SparsityBound(omega_pow(2, 3))), "sparse_large_subset: result is not sparse");
  certify(is_large(out, target), "sparse_large_subset: result is not large");
  return out;
}

}  // namespace largeness
