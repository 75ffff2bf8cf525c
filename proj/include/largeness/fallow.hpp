#pragma once

#include <string>

#include "largeness/grouping.hpp"

namespace largeness {

namespace detail {

template <Model M>
FinSet fem_k_impl(const FinSet& xs, const Coloring& f, unsigned n, unsigned k, unsigned d, const M& model);

// Fallow w^n-large subset of a (w^n + 1)-large set; min X colors.
template <Model M>
FinSet fem1_impl(const FinSet& xs, const Coloring& f, unsigned n, const M& model) {
  require(!xs.empty(), ErrorCode::EmptySet, "fallow search in the empty set");
  const Nat& x0 = xs.min();
  if (n == 0) return xs.prefix(1);
  const unsigned k = static_cast<unsigned>(small_count(x0, "min X"));
  const RamseyValue r = model.ramsey(x0, 2 * x0);
  auto cls = rt1_pigeonhole<Coloring::Color>(xs.without_min(), [&](const Nat& y) { return f(x0, y); },
                                             omega_pow(n - 1, r.value));
  if (!cls) fail(ErrorCode::PreconditionViolated, "fEM: no class of f(min X, .) is " + to_string(omega_pow(n - 1, r.value)) + "-large");
  FinSet z = fem_k_impl(cls->members, f, n - 1, k, k, model);
  FinSet w = z.with(x0);
  certify(is_fallow_set(f, w), "fEM: union with min X is not fallow");
  certify(is_large(w, omega_pow(n)), "fEM: result is not w^n-large");
  return w;
}

// Fallow w^n*d-large subset of a w^n*R_k(2d)-large set, k colors.
template <Model M>
FinSet fem_k_impl(const FinSet& xs, const Coloring& f, unsigned n, unsigned k, unsigned d, const M& model) {
  Grouping g = grouping_impl(xs, f, n, k, d, model);
  FinSet w;
  for (const auto& block : g.blocks.blocks()) w = set_union(w, fem1_impl(block, f, n, model));
  certify(is_fallow_set(f, w), "fEM_k: union of fallow blocks is not fallow");
  certify(is_large(w, omega_pow(n, d)), "fEM_k: result is not w^n*d-large");
  return w;
}

}  // namespace detail

/// X (w^n + 1)-large and (x^{R_x(2x)})-sparse with min X >= 2, f with at
/// most min X colors: an f-fallow w^n-large subset.
template <Model M = StandardModel>
FinSet em_fallow_witness(const FinSet& xs, const Coloring& f, unsigned n, const M& model = {}) {
  require(!xs.empty() && xs.min() >= 2, ErrorCode::MinTooSmall, "fEM needs min X >= 2");
  require(f.arity() == 2 && f.colors() <= xs.min(), ErrorCode::PreconditionViolated,
          "fEM needs a pair coloring with at most min X colors");
  check_large_hypothesis(model, xs, ordinary_sum(omega_pow(n), Ordinal::finite(1)), "fEM");
  check_sparse_hypothesis(model, xs, SparsityBound(GrowthFunction::pow_ramsey_2x()), "fEM");
  FinSet w = detail::fem1_impl(xs, f, n, model);
  certify(w.is_subset_of(xs) && is_fallow_set(f, w) && is_large(w, omega_pow(n)), "fEM witness");
  return w;
}

/// X w^n*R_k(2d)-large, (x^{R_x(2x)})-sparse, k^{R_k(2d)} <= min X: an
/// f-fallow w^n*d-large subset.
template <Model M = StandardModel>
FinSet fem_k_witness(const FinSet& xs, const Coloring& f, unsigned n, unsigned k, unsigned d, const M& model = {}) {
  require(f.arity() == 2 && f.colors() <= k, ErrorCode::PreconditionViolated, "fEM_k needs a pair k-coloring");
  const RamseyValue r = model.ramsey(k, Nat(2) * d);
  check_large_hypothesis(model, xs, omega_pow(n, r.value), "fEM_k");
  check_sparse_hypothesis(model, xs, SparsityBound(GrowthFunction::pow_ramsey_2x()), "fEM_k");
  detail::check_power_min(model, xs, k, r.value, "fEM_k");
  FinSet w = detail::fem_k_impl(xs, f, n, k, d, model);
  certify(w.is_subset_of(xs) && is_fallow_set(f, w) && is_large(w, omega_pow(n, d)), "fEM_k witness");
  return w;
}

/// X w^n*4-large and (x^{R_x(2x)})-sparse: an f-fallow (w^n + 1)-large subset.
template <Model M = StandardModel>
FinSet em_plus_one_witness(const FinSet& xs, const Coloring& f, unsigned n, const M& model = {}) {
  require(f.arity() == 2, ErrorCode::WrongArity, "fEM needs a pair coloring");
  check_large_hypothesis(model, xs, omega_pow(n, 4), "fEM+1");
  check_sparse_hypothesis(model, xs, SparsityBound(GrowthFunction::pow_ramsey_2x()), "fEM+1");
  const Ordinal target = ordinary_sum(omega_pow(n), Ordinal::finite(1));
  FinSet w;
  if (n == 0) {
    require(xs.size() >= 4, ErrorCode::NotLargeEnough, "fEM+1 at n = 0 needs four points");
    w = xs.prefix(2);
  } else {
    const Nat& x0 = xs.min();
    auto g = [&](const Nat& y) -> Coloring::Color { return y == x0 ? 0 : f(x0, y); };
    auto cls = rt1_pigeonhole<Coloring::Color>(xs, g, omega_pow(n, 2));
    // The w^n*4 hypothesis does not cover min X colors here; the step can fail.
    if (!cls) fail(ErrorCode::PreconditionViolated, "fEM+1: no class of f(min X, .) is w^n*2-large");
    auto y0 = minimal_large_prefix(cls->members, omega_pow(n));
    certify(y0.has_value(), "fEM+1: no w^n-large prefix");
    const FinSet y1 = cls->members.suffix_from(y0->size());
    const Nat x1 = y0->max();
    certify(x1 > x0, "fEM+1: first block is a single point");
    FinSet z = detail::fem1_impl(y1.with(x1), f, n, model);
    w = z.with(x0);
  }
  certify(w.is_subset_of(xs) && is_fallow_set(f, w) && is_large(w, target), "fEM+1 witness");
  return w;
}

}  // namespace largeness
