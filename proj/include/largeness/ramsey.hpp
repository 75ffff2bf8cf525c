#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "largeness/coloring.hpp"
#include "largeness/largeness.hpp"
#include "largeness/ordinal_io.hpp"

namespace largeness {

enum class WitnessKind { Homogeneous, Transitive, Fallow };

inline std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Homogeneous: return "homogeneous";
    case WitnessKind::Transitive: return "transitive";
    case WitnessKind::Fallow: return "fallow";
  }
  return "unknown";
}

struct HomogeneityWitness {
  FinSet subset;
  std::optional<Coloring::Color> color;
  WitnessKind kind;
};

inline bool satisfies(const Coloring& f, const FinSet& h, WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Homogeneous: return is_homogeneous(f, h).holds;
    case WitnessKind::Transitive: return is_transitive_set(f, h);
    case WitnessKind::Fallow: return is_fallow_set(f, h);
  }
  return false;
}

/// Largest carrier handled by the subset-table searches.
inline constexpr std::size_t max_table_carrier = 22;

namespace detail {

using Mask = std::uint32_t;

inline FinSet subset_of(const FinSet& carrier, Mask mask) {
  std::vector<Nat> out;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (mask >> i & 1u) out.push_back(carrier[i]);
  return FinSet(std::move(out));
}

inline int top_bit(Mask m) { return 31 - __builtin_clz(m); }

/// good[mask]: the positions in mask satisfy the (hereditary) kind predicate.
/// Built by adding the highest position to a smaller good set.
class SubsetTable {
 public:
  explicit SubsetTable(std::size_t n) : good_(std::size_t{1} << n), color_(std::size_t{1} << n) {}

  void fill(const Coloring& f, WitnessKind kind) {
    const Mask full = static_cast<Mask>(good_.size());
    good_[0] = 1;
    color_[0] = -1;
    for (Mask mask = 1; mask < full; ++mask) {
      const int h = top_bit(mask);
      const Mask rest = mask ^ (Mask{1} << h);
      good_[mask] = 0;
      color_[mask] = -1;
      if (!good_[rest]) continue;
      good_[mask] = admits(f, kind, rest, static_cast<std::size_t>(h), color_[mask]);
      if (kind == WitnessKind::Homogeneous && good_[mask] && color_[mask] < 0) color_[mask] = color_[rest];
    }
  }

  bool good(Mask m) const { return good_[m]; }
  int color(Mask m) const { return color_[m]; }

 private:
  bool admits(const Coloring& f, WitnessKind kind, Mask rest, std::size_t h, int& color) const {
    if (kind == WitnessKind::Homogeneous) {
      if (f.arity() == 1) {
        const int c = static_cast<int>(f.at(h));
        if (color_[rest] >= 0 && color_[rest] != c) return false;
        color = c;
        return true;
      }
      int c = color_[rest];
      for (std::size_t j = 0; j < h; ++j) {
        if (!(rest >> j & 1u)) continue;
        const int col = static_cast<int>(f.at(j, h));
        if (c >= 0 && col != c) return false;
        c = col;
      }
      color = c;
      return true;
    }
    for (std::size_t x = 0; x < h; ++x) {
      if (!(rest >> x & 1u)) continue;
      for (std::size_t y = x + 1; y < h; ++y) {
        if (!(rest >> y & 1u)) continue;
        const auto xy = f.at(x, y), yz = f.at(y, h), xz = f.at(x, h);
        if (kind == WitnessKind::Transitive) {
          if (xy == yz && xz != xy) return false;
        } else if (xz != xy && xz != yz) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<char> good_;
  std::vector<int> color_;
};

// Visits the k-subsets of {0..n-1} in lexicographic order until visit returns true.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    if (visit(m)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// An a-large subset of the carrier satisfying the kind predicate, searched
/// by decreasing size and then lexicographically.
inline std::optional<HomogeneityWitness> find_large_homogeneous(const Coloring& f, const Ordinal& a,
                                                                WitnessKind kind,
                                                                bool require_transitive_input = false) {
  if (kind != WitnessKind::Homogeneous)
    require(f.arity() == 2, ErrorCode::WrongArity, to_string(kind) + " sets need a pair coloring");
  if (require_transitive_input)
    require(is_transitive_coloring(f), ErrorCode::NotTransitive, "the coloring is not transitive");
  const std::size_t n = f.carrier().size();
  require(n <= max_table_carrier, ErrorCode::InfeasibleScale,
          "subset search is limited to " + std::to_string(max_table_carrier) + " points");
  detail::SubsetTable table(n);
  table.fill(f, kind);
  std::optional<HomogeneityWitness> found;
  for (std::size_t size = n + 1; size-- > 0 && !found;) {
    detail::for_each_combination(n, size, [&](detail::Mask m) {
      if (!table.good(m)) return false;
      FinSet sub = detail::subset_of(f.carrier(), m);
      if (!is_large(sub, a)) return false;
      std::optional<Coloring::Color> color;
      if (kind == WitnessKind::Homogeneous) color = is_homogeneous(f, sub).color;
      found = HomogeneityWitness{std::move(sub), color, kind};
      return true;
    });
  }
  if (found) certify(satisfies(f, found->subset, kind) && is_large(found->subset, a), "homogeneous search");
  return found;
}

enum class StatementKind { RT1, RT2, FEM, TRRT2 };

/// A largeness statement; `colors` absent means min X colors.
struct Statement {
  StatementKind kind;
  std::optional<unsigned> colors;
};

inline std::string to_string(const Statement& s) {
  std::string base;
  switch (s.kind) {
    case StatementKind::RT1: base = "RT1"; break;
    case StatementKind::RT2: base = "RT2"; break;
    case StatementKind::FEM: base = "fEM"; break;
    case StatementKind::TRRT2: base = "trRT2"; break;
  }
  return s.colors ? base + "_" + std::to_string(*s.colors) : base;
}

struct StatementOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::uint64_t resume_from = 0;
  unsigned workers = 1;
};

struct StatementResult {
  bool holds = true;
  /// Least coloring code without an a-large witness.
  std::optional<std::uint64_t> counterexample;
  std::uint64_t colorings_checked = 0;
  /// Colorings outside the statement's scope (non-transitive for trRT2).
  std::uint64_t colorings_skipped = 0;
};

/// Does every admissible coloring of X admit an a-large witness?
/// Colorings are enumerated by base-k code from `resume_from`.
inline StatementResult is_stmt_alpha_large(const FinSet& xs, const Statement& stmt, const Ordinal& a,
                                           const StatementOptions& opt = {}) {
  const unsigned arity = stmt.kind == StatementKind::RT1 ? 1 : 2;
  unsigned k = 0;
  if (stmt.colors) {
    k = *stmt.colors;
  } else {
    require(!xs.empty() && fits_u64(xs.min()) && xs.min() <= 64, ErrorCode::InfeasibleScale,
            "min X colors: min X is too large");
    k = static_cast<unsigned>(to_u64(xs.min()));
  }
  const std::size_t n = xs.size();
  require(n <= max_table_carrier, ErrorCode::InfeasibleScale, "carrier too large for enumeration");
  const std::size_t cells = arity == 1 ? n : n * (n - (n > 0)) / 2;
  // With no colors there is no coloring of a nonempty cell set at all.
  if (k == 0 && cells > 0) return {};
  k = std::max(k, 1u);
  const Capped total = capped_pow(Nat(k), Nat(cells), 64);
  require(total && *total <= Nat(opt.budget), ErrorCode::InfeasibleScale,
          std::to_string(k) + "^" + std::to_string(cells) + " colorings exceed the budget of " +
              std::to_string(opt.budget));
  const std::uint64_t end = to_u64(*total);
  const WitnessKind kind = stmt.kind == StatementKind::FEM ? WitnessKind::Fallow : WitnessKind::Homogeneous;

  std::vector<detail::Mask> large_masks;
  for (detail::Mask m = 0; m < (detail::Mask{1} << n); ++m)
    if (is_large(detail::subset_of(xs, m), a)) large_masks.push_back(m);

  struct Part {
    std::optional<std::uint64_t> counterexample;
    std::uint64_t checked = 0, skipped = 0;
  };
  auto scan = [&](std::uint64_t lo, std::uint64_t hi, Part& part) {
    Coloring f = Coloring::from_code(xs, arity, k, std::uint64_t{0});
    detail::SubsetTable table(n);
    for (std::uint64_t code = lo; code < hi; ++code) {
      f.set_code(code);
      if (stmt.kind == StatementKind::TRRT2 && !is_transitive_coloring(f)) {
        ++part.skipped;
        continue;
      }
      ++part.checked;
      table.fill(f, kind);
      const bool ok = std::any_of(large_masks.begin(), large_masks.end(), [&](auto m) { return table.good(m); });
      if (!ok) {
        part.counterexample = code;
        return;
      }
    }
  };

  const std::uint64_t start = std::min(opt.resume_from, end);
  const unsigned workers = std::max(1u, opt.workers);
  std::vector<Part> parts(workers);
  const std::uint64_t span = end - start;
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = start + span * w / workers;
      const std::uint64_t hi = start + span * (w + 1) / workers;
      if (workers == 1)
        scan(lo, hi, parts[w]);
      else
        threads.emplace_back([&, lo, hi, w] { scan(lo, hi, parts[w]); });
    }
  }
  StatementResult out;
  for (const auto& p : parts) {
    out.colorings_checked += p.checked;
    out.colorings_skipped += p.skipped;
    if (p.counterexample && !out.counterexample) out.counterexample = p.counterexample;
  }
  out.holds = !out.counterexample;
  return out;
}

/// One class of a finite partition of X that is target-large. Classes are
/// tried from the largest key down.
template <class Key>
struct ColorClass {
  FinSet members;
  Key key;
};

template <class Key, class KeyOf>
std::optional<ColorClass<Key>> rt1_pigeonhole(const FinSet& xs, KeyOf&& key_of, const Ordinal& target) {
  std::map<Key, std::vector<Nat>> classes;
  for (const auto& x : xs) classes[key_of(x)].push_back(x);
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
    FinSet members(it->second);
    if (is_large(members, target)) return ColorClass<Key>{std::move(members), it->first};
  }
  return std::nullopt;
}

/// The lexicographically least homogeneous subset of `within` with `size`
/// points, with its color.
inline std::optional<std::pair<FinSet, Coloring::Color>> leftmost_homogeneous(const Coloring& f,
                                                                               const FinSet& within,
                                                                               std::size_t size) {
  require(f.arity() == 2, ErrorCode::WrongArity, "pair coloring expected");
  const auto pos = positions_in(f, within);
  std::vector<std::size_t> chosen;
  std::optional<Coloring::Color> color;
  auto rec = [&](auto&& self, std::size_t from, std::optional<Coloring::Color> c) -> bool {
    if (chosen.size() == size) {
      color = c;
      return true;
    }
    for (std::size_t i = from; i + (size - chosen.size()) <= pos.size(); ++i) {
      std::optional<Coloring::Color> next = c;
      bool ok = true;
      for (auto j : chosen) {
        const auto col = f.at(j, pos[i]);
        if (next && *next != col) {
          ok = false;
          break;
        }
        next = col;
      }
      if (!ok) continue;
      chosen.push_back(pos[i]);
      if (self(self, i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0, std::nullopt)) return std::nullopt;
  std::vector<Nat> pts;
  for (auto i : chosen) pts.push_back(f.carrier()[i]);
  return std::pair{FinSet(std::move(pts)), color.value_or(0)};
}

/// A largest homogeneous subset of `within`, lexicographically least among those.
inline FinSet largest_homogeneous(const Coloring& f, const FinSet& within) {
  for (std::size_t size = within.size(); size >= 2; --size)
    if (auto h = leftmost_homogeneous(f, within, size)) return h->first;
  return within.prefix(1);
}

}  // namespace largeness
