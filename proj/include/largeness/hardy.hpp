#pragma once

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "largeness/finset.hpp"
#include "largeness/fundamental.hpp"

namespace largeness {

/// A strictly inflationary partial function on the naturals.
template <class H>
concept BaseFunction = requires(const H& h, const Nat& x) {
  { h(x) } -> std::convertible_to<std::optional<Nat>>;
};

/// h^A: the successor function of a finite nonempty carrier A.
class HardyFrame {
 public:
  explicit HardyFrame(FinSet carrier) : carrier_(std::move(carrier)) {
    require(!carrier_.empty(), ErrorCode::EmptySet, "a frame needs a nonempty carrier");
  }

  const FinSet& carrier() const noexcept { return carrier_; }

  std::optional<Nat> operator()(const Nat& x) const {
    auto it = std::upper_bound(carrier_.begin(), carrier_.end(), x);
    if (it == carrier_.end() || it == carrier_.begin() || *(it - 1) != x) return std::nullopt;
    return *it;
  }

 private:
  FinSet carrier_;
};

/// Defined(value) or Undefined.
class HardyResult {
 public:
  static HardyResult defined(Nat v) { return HardyResult(std::move(v)); }
  static HardyResult undefined() { return HardyResult(); }

  bool is_defined() const noexcept { return value_.has_value(); }
  const Nat& value() const {
    require(is_defined(), ErrorCode::PreconditionViolated, "value of an undefined result");
    return *value_;
  }

  friend bool operator==(const HardyResult&, const HardyResult&) = default;

 private:
  HardyResult() = default;
  explicit HardyResult(Nat v) : value_(std::move(v)) {}
  std::optional<Nat> value_;
};

/// h_a(x) for an arbitrary base function. The recursion
/// h_a(x) = h_{a}(x)(h(x)) is a tail call, so it runs as a loop.
template <BaseFunction H>
HardyResult hardy_eval(const H& h, Ordinal a, Nat x) {
  while (!a.is_zero()) {
    std::optional<Nat> next = h(x);
    if (!next) return HardyResult::undefined();
    a = fundamental_step(a, x);
    x = std::move(*next);
  }
  return HardyResult::defined(std::move(x));
}

inline HardyResult hardy_eval(const HardyFrame& frame, const Ordinal& a, const Nat& x) {
  require(frame.carrier().contains(x), ErrorCode::NotInCarrier, to_string(x) + " is not in the carrier");
  return hardy_eval<HardyFrame>(frame, a, x);
}

/// The pairs (a_i, x_i) visited while evaluating h_a(x), up to where the
/// evaluation stops. The last ordinal is 0 iff h_a(x) is defined.
inline std::vector<std::pair<Ordinal, Nat>> hardy_trace(const HardyFrame& frame, Ordinal a, Nat x) {
  require(frame.carrier().contains(x), ErrorCode::NotInCarrier, to_string(x) + " is not in the carrier");
  std::vector<std::pair<Ordinal, Nat>> out;
  out.emplace_back(a, x);
  while (!a.is_zero()) {
    std::optional<Nat> next = frame(x);
    if (!next) break;
    a = fundamental_step(a, x);
    x = std::move(*next);
    out.emplace_back(a, x);
  }
  return out;
}

}  // namespace largeness
