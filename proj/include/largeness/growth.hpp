#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "largeness/nat.hpp"
#include "largeness/ordinal.hpp"
#include "largeness/ordinal_io.hpp"
#include "largeness/ramsey_numbers.hpp"

namespace largeness {

enum class GrowthTag {
  Identity,       // x
  Successor,      // x + 1
  Double,         // 2x
  XTimes2PowX,    // x 2^x
  XTimesKPowX,    // x k^x
  PowRamsey,      // x^{R_x(2x+2)}
  PowRamsey2X,    // x^{R_x(2x)}
  KSBound,        // k^{R_k(2 g(x))}
  TrRTBound,      // m^{R_m(2x+2)}
  Custom,
};

/// A strictly increasing function on the naturals, evaluated with a bit cap
/// so that towers of exponentials do not have to be materialized.
/// R is always taken from the k^{kd} upper bound.
class GrowthFunction {
 public:
  using Evaluator = std::function<Capped(const Nat&, std::size_t)>;

  static GrowthFunction identity() { return GrowthFunction(GrowthTag::Identity, 0, "x"); }
  static GrowthFunction successor() { return GrowthFunction(GrowthTag::Successor, 0, "x+1"); }
  static GrowthFunction doubling() { return GrowthFunction(GrowthTag::Double, 0, "2x"); }
  static GrowthFunction x_times_2_pow_x() { return GrowthFunction(GrowthTag::XTimes2PowX, 2, "x*2^x"); }
  static GrowthFunction x_times_k_pow_x(Nat k) {
    return GrowthFunction(GrowthTag::XTimesKPowX, std::move(k), "x*k^x");
  }
  static GrowthFunction pow_ramsey() { return GrowthFunction(GrowthTag::PowRamsey, 0, "x^R_x(2x+2)"); }
  static GrowthFunction pow_ramsey_2x() { return GrowthFunction(GrowthTag::PowRamsey2X, 0, "x^R_x(2x)"); }
  /// x -> k^{R_k(2 g(x))}
  static GrowthFunction ks_bound(Nat k, const GrowthFunction& g) {
    GrowthFunction f(GrowthTag::KSBound, std::move(k), "k^R_k(2g(x))");
    f.inner_ = std::make_shared<GrowthFunction>(g);
    return f;
  }
  /// x -> m^{R_m(2x+2)}
  static GrowthFunction trrt_bound(Nat m) {
    return GrowthFunction(GrowthTag::TrRTBound, std::move(m), "m^R_m(2x+2)");
  }
  static GrowthFunction custom(std::string name, Evaluator eval) {
    GrowthFunction f(GrowthTag::Custom, 0, std::move(name));
    f.custom_ = std::move(eval);
    return f;
  }

  GrowthTag tag() const noexcept { return tag_; }
  const Nat& parameter() const noexcept { return k_; }

  std::string name() const {
    std::string out = name_;
    if (tag_ == GrowthTag::XTimesKPowX || tag_ == GrowthTag::KSBound || tag_ == GrowthTag::TrRTBound)
      out += "[" + k_.str() + "]";
    if (inner_) out += "[g=" + inner_->name() + "]";
    return out;
  }

  /// g(x), or nullopt when it is at least 2^cap_bits.
  Capped eval(const Nat& x, std::size_t cap_bits) const {
    switch (tag_) {
      case GrowthTag::Identity: return cap(x, cap_bits);
      case GrowthTag::Successor: return cap(x + 1, cap_bits);
      case GrowthTag::Double: return cap(2 * x, cap_bits);
      case GrowthTag::XTimes2PowX:
      case GrowthTag::XTimesKPowX:
        return capped_mul(Nat(x), capped_pow(k_, x, cap_bits), cap_bits);
      case GrowthTag::PowRamsey:
      case GrowthTag::PowRamsey2X: {
        const Nat d = tag_ == GrowthTag::PowRamsey ? Nat(2 * x + 2) : Nat(2 * x);
        if (x <= 1) return cap(x, cap_bits);
        Capped r = ramsey_upper_capped(x, d, cap_bits);
        if (!r) return std::nullopt;
        return capped_pow(x, *r, cap_bits);
      }
      case GrowthTag::KSBound: {
        Capped gx = inner_->eval(x, cap_bits);
        if (!gx) return std::nullopt;
        Capped r = ramsey_upper_capped(k_, 2 * *gx, cap_bits);
        if (!r) return k_ <= 1 ? Capped(Nat(1)) : std::nullopt;
        return capped_pow(k_, *r, cap_bits);
      }
      case GrowthTag::TrRTBound: {
        Capped r = ramsey_upper_capped(k_, 2 * x + 2, cap_bits);
        if (!r) return k_ <= 1 ? Capped(Nat(k_)) : std::nullopt;
        return capped_pow(k_, *r, cap_bits);
      }
      case GrowthTag::Custom: return custom_(x, cap_bits);
    }
    return std::nullopt;
  }

 private:
  GrowthFunction(GrowthTag tag, Nat k, std::string name)
      : tag_(tag), k_(std::move(k)), name_(std::move(name)) {}

  GrowthTag tag_;
  Nat k_;
  std::string name_;
  std::shared_ptr<const GrowthFunction> inner_;
  Evaluator custom_;
};

/// Either an ordinal (gaps must be large intervals) or a growth function
/// (each element must exceed g of its predecessor).
using SparsityBound = std::variant<Ordinal, GrowthFunction>;

inline std::string to_string(const SparsityBound& b) {
  if (const auto* a = std::get_if<Ordinal>(&b)) return "ordinal:" + to_string(*a);
  return "function:" + std::get<GrowthFunction>(b).name();
}

}  // namespace largeness
