#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "largeness/finset.hpp"

namespace largeness {

/// A total k-coloring of the singletons (arity 1) or pairs (arity 2) of a
/// finite carrier. Colors are looked up by element or by position.
class Coloring {
 public:
  using Color = std::uint32_t;

  /// Colors pairs x < y of the carrier by `f(x, y)`.
  static Coloring pairs(FinSet carrier, Color k, const std::function<Color(const Nat&, const Nat&)>& f) {
    Coloring c(std::move(carrier), 2, k);
    const std::size_t n = c.carrier_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) c.table_[c.slot(i, j)] = c.checked(f(c.carrier_[i], c.carrier_[j]));
    return c;
  }

  /// Colors points by `f(x)`.
  static Coloring points(FinSet carrier, Color k, const std::function<Color(const Nat&)>& f) {
    Coloring c(std::move(carrier), 1, k);
    for (std::size_t i = 0; i < c.carrier_.size(); ++i) c.table_[i] = c.checked(f(c.carrier_[i]));
    return c;
  }

  /// The coloring whose base-k digits, least significant first, are the
  /// colors of the arity-subsets in lexicographic order.
  static Coloring from_code(FinSet carrier, unsigned arity, Color k, Nat code) {
    require(code >= 0, ErrorCode::PreconditionViolated, "negative coloring code");
    Coloring c(std::move(carrier), arity, k);
    for (auto& cell : c.table_) {
      cell = static_cast<Color>(static_cast<std::uint64_t>(code % k));
      code /= k;
    }
    require(code.is_zero(), ErrorCode::PreconditionViolated, "coloring code out of range");
    return c;
  }

  /// Same as from_code for codes that fit a machine word; the hot path of
  /// exhaustive enumeration.
  static Coloring from_code(FinSet carrier, unsigned arity, Color k, std::uint64_t code) {
    Coloring c(std::move(carrier), arity, k);
    c.set_code(code);
    return c;
  }

  void set_code(std::uint64_t code) {
    for (auto& cell : table_) {
      cell = static_cast<Color>(code % k_);
      code /= k_;
    }
  }

  Nat code() const {
    Nat out = 0;
    for (auto it = table_.rbegin(); it != table_.rend(); ++it) out = out * k_ + *it;
    return out;
  }

  const FinSet& carrier() const noexcept { return carrier_; }
  unsigned arity() const noexcept { return arity_; }
  Color colors() const noexcept { return k_; }
  std::size_t cells() const noexcept { return table_.size(); }

  /// Position of x in the carrier.
  std::size_t index_of(const Nat& x) const {
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), x);
    require(it != carrier_.end() && *it == x, ErrorCode::NotSubset, x.str() + " is not in the carrier");
    return static_cast<std::size_t>(it - carrier_.begin());
  }

  Color at(std::size_t i) const {
    require(arity_ == 1, ErrorCode::WrongArity, "point color of a pair coloring");
    return table_[i];
  }
  /// Color of the pair at positions i != j, in either order.
  Color at(std::size_t i, std::size_t j) const {
    require(arity_ == 2, ErrorCode::WrongArity, "pair color of a point coloring");
    return i < j ? table_[slot(i, j)] : table_[slot(j, i)];
  }

  Color operator()(const Nat& x) const { return at(index_of(x)); }
  Color operator()(const Nat& x, const Nat& y) const { return at(index_of(x), index_of(y)); }

  /// The same coloring restricted to a subset of the carrier.
  Coloring restricted(const FinSet& sub) const {
    require(sub.is_subset_of(carrier_), ErrorCode::NotSubset, "restriction to a non-subset");
    std::vector<std::size_t> pos;
    for (const auto& x : sub) pos.push_back(index_of(x));
    Coloring c(sub, arity_, k_);
    if (arity_ == 1) {
      for (std::size_t i = 0; i < pos.size(); ++i) c.table_[i] = table_[pos[i]];
    } else {
      for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j) c.table_[c.slot(i, j)] = at(pos[i], pos[j]);
    }
    return c;
  }

  /// Colors renamed by `rename`, into `new_k` colors.
  Coloring recolored(Color new_k, const std::function<Color(Color)>& rename) const {
    Coloring c(carrier_, arity_, new_k);
    for (std::size_t i = 0; i < table_.size(); ++i) c.table_[i] = c.checked(rename(table_[i]));
    return c;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  Coloring(FinSet carrier, unsigned arity, Color k) : carrier_(std::move(carrier)), arity_(arity), k_(k) {
    require(arity == 1 || arity == 2, ErrorCode::WrongArity, "arity must be 1 or 2");
    require(k >= 1, ErrorCode::PreconditionViolated, "a coloring needs at least one color");
    const std::size_t n = carrier_.size();
    table_.assign(arity == 1 ? n : n * (n - (n > 0)) / 2, 0);
  }

  // Lexicographic rank of the pair (i, j), i < j.
  std::size_t slot(std::size_t i, std::size_t j) const {
    const std::size_t n = carrier_.size();
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  Color checked(Color c) const {
    require(c < k_, ErrorCode::PreconditionViolated, "color " + std::to_string(c) + " out of range");
    return c;
  }

  FinSet carrier_;
  unsigned arity_;
  Color k_;
  std::vector<Color> table_;
};

/// Outcome of a homogeneity check: sets smaller than the arity are
/// homogeneous without a color.
struct Homogeneity {
  bool holds = false;
  std::optional<Coloring::Color> color;

  explicit operator bool() const noexcept { return holds; }
};

inline std::vector<std::size_t> positions_in(const Coloring& f, const FinSet& h) {
  require(h.is_subset_of(f.carrier()), ErrorCode::NotSubset, to_string(h) + " is not inside the carrier");
  std::vector<std::size_t> pos;
  for (const auto& x : h) pos.push_back(f.index_of(x));
  return pos;
}

inline Homogeneity is_homogeneous(const Coloring& f, const FinSet& h) {
  const auto p = positions_in(f, h);
  if (p.size() < f.arity()) return {true, std::nullopt};
  std::optional<Coloring::Color> c;
  if (f.arity() == 1) {
    for (auto i : p) {
      if (c && *c != f.at(i)) return {false, std::nullopt};
      c = f.at(i);
    }
  } else {
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        const auto col = f.at(p[a], p[b]);
        if (c && *c != col) return {false, std::nullopt};
        c = col;
      }
  }
  return {true, c};
}

/// For x < y < z in H: f(x,y) = f(y,z) forces f(x,z) to the same color.
inline bool is_transitive_set(const Coloring& f, const FinSet& h) {
  require(f.arity() == 2, ErrorCode::WrongArity, "transitivity needs a pair coloring");
  const auto p = positions_in(f, h);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      for (std::size_t c = b + 1; c < p.size(); ++c) {
        const auto xy = f.at(p[a], p[b]);
        if (xy == f.at(p[b], p[c]) && f.at(p[a], p[c]) != xy) return false;
      }
  return true;
}

/// For x < y < z in H: f(x,z) is f(x,y) or f(y,z).
inline bool is_fallow_set(const Coloring& f, const FinSet& h) {
  require(f.arity() == 2, ErrorCode::WrongArity, "fallowness needs a pair coloring");
  const auto p = positions_in(f, h);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      for (std::size_t c = b + 1; c < p.size(); ++c) {
        const auto xz = f.at(p[a], p[c]);
        if (xz != f.at(p[a], p[b]) && xz != f.at(p[b], p[c])) return false;
      }
  return true;
}

inline bool is_transitive_coloring(const Coloring& f) { return is_transitive_set(f, f.carrier()); }

}  // namespace largeness
