#pragma once

#include <functional>
#include <string>
#include <vector>

#include "largeness/fallow.hpp"
#include "largeness/transitive.hpp"

namespace largeness {

/// The steps a pipeline chains together. The standard set runs the real
/// constructions; tests swap in scaled-down stand-ins to exercise the chaining.
struct PipelineDeps {
  std::function<bool(const FinSet&, const Ordinal&)> is_large;
  /// (w^2*3)-sparse (w^m*l + 1)-large subset.
  std::function<FinSet(const FinSet&, unsigned m, unsigned l)> sparse_subset;
  /// Fallow w^n-large subset.
  std::function<FinSet(const FinSet&, const Coloring&, unsigned n)> fallow;
  /// Fallow (w^n + 1)-large subset.
  std::function<FinSet(const FinSet&, const Coloring&, unsigned n)> fallow_plus_one;
  /// w^n-large homogeneous subset for a transitive k-coloring.
  std::function<FinSet(const FinSet&, const Coloring&, unsigned n, unsigned k)> transitive_homogeneous;
};

inline PipelineDeps standard_deps() {
  return PipelineDeps{
      [](const FinSet& xs, const Ordinal& a) { return largeness::is_large(xs, a); },
      [](const FinSet& xs, unsigned m, unsigned l) { return sparse_large_subset(xs, m, l); },
      [](const FinSet& ys, const Coloring& f, unsigned n) { return em_fallow_witness(ys, f, n); },
      [](const FinSet& ys, const Coloring& f, unsigned n) { return em_plus_one_witness(ys, f, n); },
      [](const FinSet& ys, const Coloring& f, unsigned n, unsigned k) {
        return trrt_homogeneous_witness(ys, f, n, k).subset;
      },
  };
}

/// A physically built input for the pipelines: the least a-large set
/// starting at x0. Any instance the theorems speak about exceeds the element
/// budget, so this raises InfeasibleScale.
inline FinSet real_instance(const Nat& x0, const Ordinal& a) { return minimal_large_suffix(x0, a); }

namespace detail {

inline void gate(const PipelineDeps& deps, const FinSet& xs, const Nat& min_bound, const Ordinal& a,
                 const std::string& what) {
  require(!xs.empty() && xs.min() >= min_bound, ErrorCode::MinTooSmall,
          what + " needs min X >= " + min_bound.str());
  require(deps.is_large(xs, a), ErrorCode::NotLargeEnough, what + " needs X to be " + to_string(a) + "-large");
}

/// Y_0 the least prefix that is a-large under deps, Y_1 the rest.
inline std::pair<FinSet, FinSet> split_prefix(const PipelineDeps& deps, const FinSet& ys, const Ordinal& a) {
  for (std::size_t len = 0; len <= ys.size(); ++len) {
    FinSet head = ys.prefix(len);
    if (deps.is_large(head, a)) return {std::move(head), ys.suffix_from(len)};
  }
  fail(ErrorCode::PreconditionViolated, "no " + to_string(a) + "-large prefix");
}

inline FinSet transitive_stage(const PipelineDeps& deps, const FinSet& xs, const Coloring& f, unsigned n, unsigned k,
                               const std::string& what) {
  const FinSet y = deps.sparse_subset(xs, n * k, 2);
  auto [y0, y1] = split_prefix(deps, y, omega_pow(n * k));
  FinSet h = deps.transitive_homogeneous(y1, f, n, k);
  certify(h.is_subset_of(xs) && is_homogeneous(f, h) && deps.is_large(h, omega_pow(n)), what + " witness");
  return h;
}

}  // namespace detail

/// X w^{n+3}-large with min X >= 7: an f-fallow w^n-large subset.
inline FinSet em_pipeline(const FinSet& xs, const Coloring& f, unsigned n, const PipelineDeps& deps = standard_deps()) {
  detail::gate(deps, xs, 7, omega_pow(n + 3), "fEM pipeline");
  const FinSet y = deps.sparse_subset(xs, n, 1);
  FinSet w = deps.fallow(y, f, n);
  certify(w.is_subset_of(xs) && is_fallow_set(f, w) && deps.is_large(w, omega_pow(n)), "fEM pipeline witness");
  return w;
}

/// X w^{nk+3}-large with min X >= 8, f transitive: an f-homogeneous
/// w^n-large subset.
inline FinSet trrt_pipeline(const FinSet& xs, const Coloring& f, unsigned n, unsigned k,
                            const PipelineDeps& deps = standard_deps()) {
  require(k >= 1, ErrorCode::PreconditionViolated, "trRT pipeline needs k >= 1");
  detail::gate(deps, xs, 8, omega_pow(n * k + 3), "trRT pipeline");
  require(is_transitive_set(f, xs), ErrorCode::NotTransitive, "coloring is not transitive on X");
  return detail::transitive_stage(deps, xs, f, n, k, "trRT pipeline");
}

/// X w^{2n+3}-large with min X >= 9, f a transitive 2-coloring (a linear
/// order read off pairs): an f-homogeneous w^n-large subset.
inline FinSet ads_pipeline(const FinSet& xs, const Coloring& f, unsigned n,
                           const PipelineDeps& deps = standard_deps()) {
  require(f.colors() <= 2, ErrorCode::PreconditionViolated, "ADS pipeline needs a 2-coloring");
  detail::gate(deps, xs, 9, omega_pow(2 * n + 3), "ADS pipeline");
  require(is_transitive_set(f, xs), ErrorCode::NotTransitive, "coloring is not transitive on X");
  return detail::transitive_stage(deps, xs, f, n, 2, "ADS pipeline");
}

/// X w^{kn+3}-large with min X >= 17, n, k >= 1: an f-homogeneous w^n-large
/// subset, through a fallow subset and then a transitive one.
inline FinSet rt2_pipeline(const FinSet& xs, const Coloring& f, unsigned n, unsigned k,
                           const PipelineDeps& deps = standard_deps()) {
  require(n >= 1 && k >= 1, ErrorCode::PreconditionViolated, "RT2 pipeline needs n, k >= 1");
  require(f.colors() <= k, ErrorCode::PreconditionViolated, "coloring uses more than k colors");
  detail::gate(deps, xs, 17, omega_pow(k * n + 3), "RT2 pipeline");
  const FinSet y = deps.sparse_subset(xs, k * n, 5);
  auto [x0, x1] = detail::split_prefix(deps, y, omega_pow(k * n));
  const FinSet w = deps.fallow_plus_one(x1, f, k * n);
  certify(is_fallow_set(f, w) && is_transitive_set(f, w), "RT2 pipeline: fallow stage");
  FinSet h = deps.transitive_homogeneous(w, f, n, k);
  certify(h.is_subset_of(xs) && is_homogeneous(f, h) && deps.is_large(h, omega_pow(n)), "RT2 pipeline witness");
  return h;
}

}  // namespace largeness
