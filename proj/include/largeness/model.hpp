#pragma once

#include <concepts>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "largeness/largeness.hpp"
#include "largeness/ramsey_numbers.hpp"

namespace largeness {

/// How a constructive procedure treats the hypotheses of the statement it
/// implements. Outputs are always re-certified with the real predicates;
/// the model only decides whether hypotheses are checked up front and which
/// value stands in for R_k(d).
template <class M>
concept Model = requires(const M& m, const FinSet& xs, const Ordinal& a, const SparsityBound& g,
                         const Nat& k) {
  { m.hypothesis_large(xs, a) } -> std::convertible_to<bool>;
  { m.hypothesis_sparse(xs, g) } -> std::convertible_to<bool>;
  { m.hypothesis_min(xs, k) } -> std::convertible_to<bool>;
  { m.ramsey(k, k) } -> std::convertible_to<RamseyValue>;
};

/// Checks every hypothesis for real.
struct StandardModel {
  bool hypothesis_large(const FinSet& xs, const Ordinal& a) const { return is_large(xs, a); }
  bool hypothesis_sparse(const FinSet& xs, const SparsityBound& g) const { return is_sparse(xs, g); }
  bool hypothesis_min(const FinSet& xs, const Nat& bound) const { return !xs.empty() && xs.min() >= bound; }
  RamseyValue ramsey(const Nat& k, const Nat& d) const { return ramsey_for_construction(k, d); }
};

/// Takes largeness and sparsity hypotheses for granted, so that the
/// construction steps of a proof can be exercised on inputs far below the
/// scale the statement needs. Ramsey values may be overridden to shrink
/// instances further; overridden values are reported as assumed.
struct AssumingModel {
  std::map<std::pair<Nat, Nat>, Nat> ramsey_override;

  bool hypothesis_large(const FinSet&, const Ordinal&) const { return true; }
  bool hypothesis_sparse(const FinSet&, const SparsityBound&) const { return true; }
  bool hypothesis_min(const FinSet&, const Nat&) const { return true; }
  RamseyValue ramsey(const Nat& k, const Nat& d) const {
    if (auto it = ramsey_override.find({k, d}); it != ramsey_override.end())
      return {it->second, RamseySource::Assumed};
    return ramsey_for_construction(k, d);
  }
};

template <Model M>
void check_large_hypothesis(const M& model, const FinSet& xs, const Ordinal& a, const std::string& what) {
  if (!model.hypothesis_large(xs, a))
    fail(ErrorCode::NotLargeEnough, what + ": " + to_string(xs) + " is not " + to_string(a) + "-large");
}

template <Model M>
void check_sparse_hypothesis(const M& model, const FinSet& xs, const SparsityBound& g, const std::string& what) {
  if (!model.hypothesis_sparse(xs, g))
    fail(ErrorCode::PreconditionViolated, what + ": input is not " + to_string(g) + "-sparse");
}

template <Model M>
void check_min_hypothesis(const M& model, const FinSet& xs, const Nat& bound, const std::string& what) {
  if (!model.hypothesis_min(xs, bound))
    fail(ErrorCode::PreconditionViolated, what + ": min X must be at least " + bound.str());
}

}  // namespace largeness
