#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "largeness/error.hpp"

namespace largeness {

using Nat = boost::multiprecision::cpp_int;

inline std::string to_string(const Nat& n) { return n.str(); }

inline std::size_t bit_length(const Nat& n) {
  return n.is_zero() ? 0 : boost::multiprecision::msb(n) + 1;
}

inline bool fits_u64(const Nat& n) { return n >= 0 && bit_length(n) <= 64; }

inline std::uint64_t to_u64(const Nat& n) {
  require(fits_u64(n), ErrorCode::Unsupported, "natural does not fit in 64 bits: " + n.str());
  return n.convert_to<std::uint64_t>();
}

/// Parses a decimal natural number; throws ParseError on anything else.
inline Nat parse_nat(std::string_view text) {
  if (text.empty()) throw ParseError(0, "expected a natural number");
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw ParseError(i, "expected a digit");
  return Nat(std::string(text));
}

/// Arithmetic that gives up once a result would exceed a bit budget.
/// `std::nullopt` means "at least 2^cap_bits".
using Capped = std::optional<Nat>;

inline Capped cap(Nat n, std::size_t cap_bits) {
  if (bit_length(n) > cap_bits) return std::nullopt;
  return n;
}

inline Capped capped_mul(const Capped& a, const Capped& b, std::size_t cap_bits) {
  if (!a || !b) return std::nullopt;
  if (a->is_zero() || b->is_zero()) return Nat(0);
  if (bit_length(*a) + bit_length(*b) > cap_bits + 1) return std::nullopt;
  return cap(*a * *b, cap_bits);
}

inline Capped capped_pow(const Nat& base, const Nat& exponent, std::size_t cap_bits) {
  if (exponent.is_zero()) return Nat(1);
  if (base <= 1) return base;
  if (exponent > Nat(cap_bits)) return std::nullopt;  // base >= 2
  Capped result = Nat(1);
  Capped square = Nat(base);
  Nat e = exponent;
  while (!e.is_zero()) {
    if ((e & 1) != 0) {
      result = capped_mul(result, square, cap_bits);
      if (!result) return std::nullopt;
    }
    e >>= 1;
    if (!e.is_zero()) {
      square = capped_mul(square, square, cap_bits);
      if (!square) return std::nullopt;
    }
  }
  return result;
}

inline std::string to_string(const Capped& c) { return c ? c->str() : std::string("overflow"); }

}  // namespace largeness
