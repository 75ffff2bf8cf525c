#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "largeness/grouping.hpp"

namespace largeness {

namespace detail {

inline std::size_t growth_at(const GrowthFunction& g, const Nat& x) {
  Capped v = g.eval(x, 64);
  require(v.has_value(), ErrorCode::InfeasibleScale, g.name() + " at " + x.str() + " is too large");
  return small_count(*v, g.name());
}

template <Model M>
FinSet ks_impl(const FinSet& xs, const Coloring& f, unsigned k, const GrowthFunction& g, const M& model) {
  require(!xs.empty(), ErrorCode::EmptySet, "homogeneous search in the empty set");
  if (k <= 1) return xs;
  const Nat& x0 = xs.min();
  const std::size_t d = growth_at(g, x0);
  if (d <= 1) {
    require(xs.size() > d, ErrorCode::NotLargeEnough, "KS: fewer than g(min X) + 1 points");
    return xs.prefix(d + 1);
  }
  const RamseyValue r = model.ramsey(k, Nat(2) * d);
  auto cls = rt1_pigeonhole<Coloring::Color>(xs.without_min(), [&](const Nat& y) { return f(x0, y); },
                                             omega_pow(k - 1, r.value));
  if (!cls) fail(ErrorCode::PreconditionViolated, "KS: no class of f(min X, .) is " + to_string(omega_pow(k - 1, r.value)) + "-large");
  const Coloring::Color c0 = cls->key;
  const Grouping grp = grouping_impl(cls->members, f, k - 1, k, static_cast<unsigned>(d), model);
  const Coloring::Color c1 = grp.color;
  if (c0 == c1) {
    std::vector<Nat> pts{x0};
    for (const auto& b : grp.blocks.blocks()) pts.push_back(b.min());
    return FinSet(std::move(pts));
  }

  // Fuse c1 into c0 and close the gap so that k - 1 colors remain.
  const Coloring fused = f.recolored(k - 1, [&](Coloring::Color c) {
    if (c == c1) c = c0;
    return c > c1 ? c - 1 : c;
  });
  const FinSet z1 = ks_impl(grp.blocks[1], fused, k - 1, g, model);
  if (is_homogeneous(f, z1)) return z1;
  const Nat& y0 = grp.blocks[0].min();
  auto w = leftmost_homogeneous(f, z1, growth_at(g, y0));
  if (!w) fail(ErrorCode::PreconditionViolated, "KS: no homogeneous g(min Y_0)-set after fusing colors");
  return w->first.with(w->second == c0 ? x0 : y0);
}

/// Chains x = h_0 < ... < h_m < y inside X, consecutive pairs colored i,
/// ending with f(h_m, y) = i, whose points form an a-large set. For a
/// transitive f these are exactly the sets H with x in H and H + {y}
/// homogeneous for i.
class ChainSearch {
 public:
  ChainSearch(const Coloring& f, const FinSet& xs) : f_(f), pos_(positions_in(f, xs)), xs_(xs) {}

  std::optional<FinSet> find(std::size_t x, std::size_t y, Coloring::Color i, const Ordinal& a) {
    dead_.clear();
    path_.assign(1, x);
    const Ordinal first = fundamental_step(a, xs_[x]);
    if (!dfs(x, y, i, first)) return std::nullopt;
    std::vector<Nat> pts;
    for (auto p : path_) pts.push_back(xs_[p]);
    return FinSet(std::move(pts));
  }

 private:
  bool dfs(std::size_t p, std::size_t y, Coloring::Color i, const Ordinal& rest) {
    if (rest.is_zero() && f_.at(pos_[p], pos_[y]) == i) return true;
    if (dead_.contains({p, rest})) return false;
    for (std::size_t q = p + 1; q < y; ++q) {
      if (f_.at(pos_[p], pos_[q]) != i) continue;
      path_.push_back(q);
      if (dfs(q, y, i, fundamental_step(rest, xs_[q]))) return true;
      path_.pop_back();
    }
    dead_.insert({p, rest});
    return false;
  }

  const Coloring& f_;
  std::vector<std::size_t> pos_;
  const FinSet& xs_;
  std::set<std::pair<std::size_t, Ordinal>> dead_;
  std::vector<std::size_t> path_;
};

}  // namespace detail

/// X (w^k + 1)-large and g-sparse (k = 1) or (x -> k^{R_k(2g(x))})-sparse
/// (k >= 2), f a k-coloring of its pairs: an f-homogeneous H with
/// card H > g(min H).
template <Model M = StandardModel>
FinSet ks_revisited(const FinSet& xs, const Coloring& f, unsigned k, const GrowthFunction& g, const M& model = {}) {
  require(f.arity() == 2, ErrorCode::WrongArity, "KS needs a pair coloring");
  require(k >= 1 && f.colors() <= k, ErrorCode::PreconditionViolated, "KS needs a k-coloring with k >= 1");
  require(xs.is_subset_of(f.carrier()), ErrorCode::NotSubset, "X is not inside the coloring's carrier");
  check_large_hypothesis(model, xs, ordinary_sum(omega_pow(k), Ordinal::finite(1)), "KS");
  check_sparse_hypothesis(model, xs, k == 1 ? SparsityBound(g) : SparsityBound(GrowthFunction::ks_bound(k, g)), "KS");
  FinSet h = detail::ks_impl(xs, f, k, g, model);
  certify(h.is_subset_of(xs) && is_homogeneous(f, h) && is_omega_g_large(h, g), "KS witness");
  return h;
}

/// X (w^{kn} + 1)-large and (x -> (kn)^{R_kn(2x+2)})-sparse, f a transitive
/// k-coloring: an f-homogeneous w^n-large subset.
template <Model M = StandardModel>
HomogeneityWitness trrt_homogeneous_witness(const FinSet& xs, const Coloring& f, unsigned n, unsigned k,
                                            const M& model = {}) {
  require(f.arity() == 2, ErrorCode::WrongArity, "trRT needs a pair coloring");
  require(k >= 1 && f.colors() <= k, ErrorCode::PreconditionViolated, "trRT needs a k-coloring with k >= 1");
  require(!xs.empty(), ErrorCode::EmptySet, "trRT on the empty set");
  require(is_transitive_set(f, xs), ErrorCode::NotTransitive, "coloring is not transitive on X");
  const unsigned kn = k * n;
  check_large_hypothesis(model, xs, ordinary_sum(omega_pow(kn), Ordinal::finite(1)), "trRT");
  if (kn > 0) check_sparse_hypothesis(model, xs, SparsityBound(GrowthFunction::trrt_bound(kn)), "trRT");
  if (n == 0) return {xs.prefix(1), std::nullopt, WitnessKind::Homogeneous};

  // f-bar(x, y) = k j + i: i = f(x, y), j the least index with no
  // w^{j+1}-large chain from x to y in color i, capped at n - 1.
  detail::ChainSearch chains(f, xs);
  const std::size_t size = xs.size();
  std::vector<Coloring::Color> level(size * size, 0);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = x + 1; y < size; ++y) {
      const auto i = f(xs[x], xs[y]);
      unsigned j = 0;
      while (j + 1 < n && chains.find(x, y, i, omega_pow(j + 1))) ++j;
      level[x * size + y] = k * j + i;
    }
  auto index = [&](const Nat& v) { return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin()); };
  const Coloring fbar =
      Coloring::pairs(xs, kn, [&](const Nat& a, const Nat& b) { return level[index(a) * size + index(b)]; });

  const FinSet ys = detail::ks_impl(xs, fbar, kn, GrowthFunction::successor(), model);
  certify(is_homogeneous(fbar, ys) && is_omega_g_large(ys, GrowthFunction::successor()), "trRT: auxiliary witness");
  const auto bar = is_homogeneous(fbar, ys).color.value_or(0);
  const unsigned j = bar / k;
  const Coloring::Color i = bar % k;

  // H = {y_0} + H_1 + ... + H_{l-1}, H_s a w^j-large chain from y_s to y_{s+1}.
  std::vector<Nat> pts{ys.min()};
  for (std::size_t s = 1; s + 1 < ys.size(); ++s) {
    auto hs = chains.find(index(ys[s]), index(ys[s + 1]), i, omega_pow(j));
    certify(hs.has_value(), "trRT: missing chain between consecutive points");
    pts.insert(pts.end(), hs->begin(), hs->end());
  }
  FinSet h(std::move(pts));
  certify(j + 1 == n, "trRT: auxiliary color below the top level");
  certify(is_homogeneous(f, h) && is_large(h, omega_pow(n)), "trRT witness");
  return {std::move(h), i, WitnessKind::Homogeneous};
}

}  // namespace largeness
