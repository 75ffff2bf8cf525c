#pragma once

#include <string>
#include <vector>

#include "largeness/coloring.hpp"
#include "largeness/model.hpp"
#include "largeness/partition.hpp"
#include "largeness/ramsey.hpp"

namespace largeness {

/// Blocks Y_0 < ... < Y_{d-1} with every cross-block pair colored `color`.
struct Grouping {
  BlockSequence blocks;
  Coloring::Color color = 0;
  RamseyValue ramsey;
};

namespace detail {

inline std::size_t small_count(const Nat& v, const std::string& what) {
  require(fits_u64(v) && v <= Nat(default_element_budget), ErrorCode::InfeasibleScale, what + " = " + v.str() + " is too large");
  return static_cast<std::size_t>(to_u64(v));
}

/// k^R <= min X, read through the model.
template <Model M>
void check_power_min(const M& model, const FinSet& xs, const Nat& k, const Nat& r, const std::string& what) {
  Capped bound = capped_pow(k, r, 4096);
  check_min_hypothesis(model, xs, bound ? *bound : Nat(1) << 4097, what);
}

template <Model M>
Grouping grouping_impl(const FinSet& xs, const Coloring& f, unsigned n, unsigned k, unsigned d, const M& model) {
  const RamseyValue r = model.ramsey(k, Nat(2) * d);
  const std::size_t big_r = small_count(r.value, "R_k(2d)");
  if (d == 0) return Grouping{BlockSequence{}, 0, r};

  if (n == 0) {
    auto h = leftmost_homogeneous(f, xs, 2 * std::size_t{d});
    if (!h)
      fail(ErrorCode::PreconditionViolated,
           "grouping: no homogeneous " + std::to_string(2 * d) + "-set in " + std::to_string(xs.size()) + " points");
    std::vector<FinSet> blocks;
    for (unsigned i = 0; i < d; ++i) blocks.push_back(FinSet(std::vector<Nat>{h->first[2 * i], h->first[2 * i + 1]}));
    return Grouping{BlockSequence(std::move(blocks)), h->second, r};
  }

  // X_0 < ... < X_{R-1}, each w^n-large.
  auto parts = greedy_blocks(xs, omega_pow(n), big_r);
  if (!parts) fail(ErrorCode::PreconditionViolated, "grouping: X does not split into R_k(2d) w^n-large blocks");
  const auto& xb = parts->blocks;

  // Z_{R-1}, ..., Z_0: Z_i inside X_i, homogeneous for f_i, which records the
  // colors towards every earlier block and towards the later Z's minima.
  std::vector<FinSet> zs(big_r);
  std::vector<Nat> earlier;
  for (std::size_t i = 0; i < big_r; ++i) earlier.insert(earlier.end(), xb[i].begin(), xb[i].end());
  for (std::size_t i = big_r; i-- > 0;) {
    earlier.resize(earlier.size() - xb[i].size());
    auto key_of = [&](const Nat& x) {
      std::vector<Coloring::Color> key;
      key.reserve(earlier.size() + big_r);
      for (const auto& y : earlier) key.push_back(f(y, x));
      for (std::size_t j = i + 1; j < big_r; ++j) key.push_back(f(x, zs[j].min()));
      return key;
    };
    const Ordinal target = i == 0 ? omega_pow(n - 1) : omega_pow(n - 1, xb[i - 1].max());
    auto cls = rt1_pigeonhole<std::vector<Coloring::Color>>(xb[i], key_of, target);
    if (!cls)
      fail(ErrorCode::PreconditionViolated,
           "grouping: block " + std::to_string(i) + " has no " + to_string(target) + "-large homogeneous class");
    zs[i] = std::move(cls->members);
  }

  // Finite Ramsey on the block indices.
  std::vector<Nat> minima;
  for (const auto& z : zs) minima.push_back(z.min());
  const FinSet indices = FinSet::interval(0, Nat(big_r) - 1);
  const Coloring g = Coloring::pairs(indices, f.colors(), [&](const Nat& i, const Nat& j) {
    return f(minima[static_cast<std::size_t>(i)], minima[static_cast<std::size_t>(j)]);
  });
  auto h = leftmost_homogeneous(g, indices, 2 * std::size_t{d});
  if (!h)
    fail(ErrorCode::PreconditionViolated, "grouping: no homogeneous " + std::to_string(2 * d) + "-set of blocks");

  // Y_j: the last two points of Z_{i_{2j}} followed by Z_{i_{2j+1}}.
  std::vector<FinSet> blocks;
  for (unsigned j = 0; j < d; ++j) {
    const FinSet& lo = zs[static_cast<std::size_t>(h->first[2 * j])];
    const FinSet& hi = zs[static_cast<std::size_t>(h->first[2 * j + 1])];
    if (lo.size() < 2) fail(ErrorCode::PreconditionViolated, "grouping: a homogeneous block has fewer than two points");
    blocks.push_back(set_union(lo.suffix_from(lo.size() - 2), hi));
  }
  return Grouping{BlockSequence(std::move(blocks)), h->second, r};
}

}  // namespace detail

/// X w^n*R_k(2d)-large and (x k^x)-sparse with k^{R_k(2d)} <= min X, f a
/// k-coloring of its pairs: d blocks, each (w^n + 1)-large, with all
/// cross-block pairs of one color.
template <Model M = StandardModel>
Grouping grouping(const FinSet& xs, const Coloring& f, unsigned n, unsigned k, unsigned d, const M& model = {}) {
  require(f.arity() == 2, ErrorCode::WrongArity, "grouping needs a pair coloring");
  require(f.colors() <= k, ErrorCode::PreconditionViolated, "coloring uses more than k colors");
  require(xs.is_subset_of(f.carrier()), ErrorCode::NotSubset, "X is not inside the coloring's carrier");
  const RamseyValue r = model.ramsey(k, Nat(2) * d);
  check_large_hypothesis(model, xs, omega_pow(n, r.value), "grouping");
  check_sparse_hypothesis(model, xs, SparsityBound(GrowthFunction::x_times_k_pow_x(k)), "grouping");
  detail::check_power_min(model, xs, k, r.value, "grouping");

  Grouping out = detail::grouping_impl(xs, f, n, k, d, model);
  certify(out.blocks.size() == d, "grouping: wrong number of blocks");
  const Ordinal block_size = ordinary_sum(omega_pow(n), Ordinal::finite(1));
  for (std::size_t s = 0; s < out.blocks.size(); ++s) {
    certify(out.blocks[s].is_subset_of(xs), "grouping: block leaves X");
    certify(is_large(out.blocks[s], block_size), "grouping: block " + to_string(out.blocks[s]) + " is not large");
    for (std::size_t t = s + 1; t < out.blocks.size(); ++t)
      for (const auto& x : out.blocks[s])
        for (const auto& y : out.blocks[t]) certify(f(x, y) == out.color, "grouping: cross pair has another color");
  }
  return out;
}

}  // namespace largeness
