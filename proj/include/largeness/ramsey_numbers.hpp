#pragma once

#include <optional>
#include <string>

#include "largeness/error.hpp"
#include "largeness/nat.hpp"

namespace largeness {

/// R_k(d) <= k^{kd}.
inline Nat ramsey_upper(const Nat& k, const Nat& d) {
  require(k >= 1, ErrorCode::PreconditionViolated, "ramsey_upper needs k >= 1");
  if (k == 1) return 1;
  auto v = capped_pow(k, k * d, 1u << 20);
  require(v.has_value(), ErrorCode::InfeasibleScale, "k^(kd) exceeds 2^(2^20)");
  return *v;
}

/// k^{kd}, or nullopt once it exceeds 2^cap_bits.
inline Capped ramsey_upper_capped(const Nat& k, const Nat& d, std::size_t cap_bits) {
  if (k <= 1) return Nat(1);
  return capped_pow(k, k * d, cap_bits);
}

/// Exact R_k(d) where it is known; nullopt otherwise.
inline std::optional<Nat> ramsey_exact_lookup(const Nat& k, const Nat& d) {
  if (k < 1) return std::nullopt;
  if (d <= 2) return d;
  if (k == 1) return d;
  if (k == 2 && d == 3) return Nat(6);
  if (k == 2 && d == 4) return Nat(18);
  if (k == 3 && d == 3) return Nat(17);
  return std::nullopt;
}

/// Exact small Ramsey numbers for test oracles.
inline Nat ramsey_exact_small(const Nat& k, const Nat& d) {
  auto v = ramsey_exact_lookup(k, d);
  if (!v) fail(ErrorCode::Unsupported, "R_" + k.str() + "(" + d.str() + ") is not tabulated");
  return *v;
}

enum class RamseySource { ExactTable, UpperBound, Assumed };

inline std::string to_string(RamseySource s) {
  switch (s) {
    case RamseySource::ExactTable: return "exact-table";
    case RamseySource::UpperBound: return "upper-bound";
    case RamseySource::Assumed: return "assumed";
  }
  return "unknown";
}

/// A value standing in for R_k(d), with where it came from.
struct RamseyValue {
  Nat value;
  RamseySource source;
};

/// Exact value when tabulated, k^{kd} otherwise.
inline RamseyValue ramsey_for_construction(const Nat& k, const Nat& d) {
  if (auto v = ramsey_exact_lookup(k, d)) return {*v, RamseySource::ExactTable};
  return {ramsey_upper(k, d), RamseySource::UpperBound};
}

}  // namespace largeness
