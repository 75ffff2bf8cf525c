#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "largeness/hardy.hpp"
#include "largeness/micro.hpp"
#include "largeness/ordinal_io.hpp"
#include "largeness/universe.hpp"

namespace largeness {

struct SuiteOptions {
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t seed = 20240917;
  std::uint64_t samples = 100000;
};

/// Outcome of an exhaustive property sweep. Cases are visited in a fixed
/// order, so the first counterexample is the least one in that order.
class SuiteReport {
 public:
  SuiteReport(std::string name, const SuiteOptions& opt) : name_(std::move(name)), budget_(opt.budget) {}

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    count(1);
    if (!ok) {
      ++failures_;
      if (!counterexample_) counterexample_ = describe();
    }
  }

  /// Adds cases that were settled in bulk.
  void count(std::uint64_t n) {
    cases_ += n;
    if (cases_ > budget_) fail(ErrorCode::BudgetExceeded, name_ + ": more than " + std::to_string(budget_) + " cases");
  }

  void note(std::string s) { notes_.push_back(std::move(s)); }

  const std::string& name() const noexcept { return name_; }
  bool passed() const noexcept { return failures_ == 0; }
  std::uint64_t cases() const noexcept { return cases_; }
  std::uint64_t failures() const noexcept { return failures_; }
  const std::optional<std::string>& counterexample() const noexcept { return counterexample_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

 private:
  std::string name_;
  std::uint64_t budget_;
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::optional<std::string> counterexample_;
  std::vector<std::string> notes_;
};

namespace suites {

using Mask = std::uint32_t;

inline FinSet mask_set(Mask m, unsigned lo) {
  std::vector<Nat> v;
  for (unsigned i = 0; m >> i; ++i)
    if ((m >> i) & 1u) v.emplace_back(lo + i);
  return FinSet(std::move(v));
}

inline std::string str(const Ordinal& a) { return to_string(a); }
inline std::string str(const FinSet& s) { return to_string(s); }

/// Expects `body` to throw `code`.
template <class Body>
bool throws_code(Body&& body, ErrorCode code) {
  try {
    body();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// ---------------------------------------------------------------------------

inline SuiteReport worked_example(const SuiteOptions& opt = {}) {
  SuiteReport r("worked-example", opt);
  const FinSet x{3, 5, 6, 7, 8};
  const Ordinal w = Ordinal::omega();
  r.check(is_large(x, w), [] { return "{3,5,6,7,8} should be w-large"; });
  r.check(!is_large(x, ordinary_sum(w, Ordinal::finite(1))), [] { return "{3,5,6,7,8} should not be w+1-large"; });
  r.check(!is_at_most_large(x, w), [] { return "{3,5,6,7,8} should not be at most w-large"; });
  r.check(fundamental_step(w, 1) == Ordinal::finite(1), [] { return "{w}(1) should be 1"; });
  r.check(fundamental_step(Ordinal::finite(10), 1) == Ordinal::finite(9), [] { return "{10}(1) should be 9"; });
  return r;
}

/// A nonempty A in [1,12] with at most six points is at most a-large
/// exactly when h^A_a(min A) is undefined.
inline SuiteReport hardy_bridge(const SuiteOptions& opt = {}, const std::vector<Ordinal>& universe = small_universe()) {
  SuiteReport r("hardy-bridge", opt);
  for (Mask m = 1; m < (1u << 12); ++m) {
    if (std::popcount(m) > 6) continue;
    const FinSet a_set = mask_set(m, 1);
    const HardyFrame frame(a_set);
    for (const auto& a : universe) {
      if (a.is_zero()) continue;
      const bool at_most = is_at_most_large(a_set, a);
      const bool undefined = !hardy_eval(frame, a, a_set.min()).is_defined();
      r.check(at_most == undefined, [&] { return "A = " + str(a_set) + ", a = " + str(a); });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Union bound. Sets live in [2,12]; an 11-bit mask per set.

namespace detail {

constexpr unsigned union_lo = 2;
constexpr unsigned union_bits = 11;
using UnionTable = std::bitset<1u << union_bits>;

/// at_most[S] for every S in [2,12]. A walk needs at least walk_weight
/// steps to reach 0, which settles whole subtrees without walking them.
inline UnionTable at_most_table(const Ordinal& a) {
  UnionTable t;
  t[0] = a.is_zero();
  auto mark_all_above = [&](Mask s, unsigned next) {
    const Mask high = ((1u << union_bits) - 1) & ~((1u << next) - 1);
    for (Mask sub = high;; sub = (sub - 1) & high) {
      if (sub) t[s | sub] = true;
      if (!sub) break;
    }
  };
  auto rec = [&](auto&& self, Mask s, unsigned next, const Ordinal& state) -> void {
    if (state.is_zero()) return;  // every extension keeps a large proper part
    if (walk_weight(state) >= Nat(union_bits - next)) {
      mark_all_above(s, next);
      return;
    }
    for (unsigned i = next; i < union_bits; ++i) {
      const Mask child = s | (1u << i);
      t[child] = true;
      self(self, child, i + 1, fundamental_step(state, union_lo + i));
    }
  };
  rec(rec, 0, 0, a);
  return t;
}

// Closed under removing points, down to singletons: the empty set is at
// most a-large only for a = 0 by convention.
inline bool downward_closed(const UnionTable& t) {
  for (Mask m = 0; m < (1u << union_bits); ++m)
    if (t[m])
      for (unsigned i = 0; i < union_bits; ++i)
        if (((m >> i) & 1u) && (m & ~(1u << i)) && !t[m & ~(1u << i)]) return false;
  return true;
}

}  // namespace detail

/// For every disjoint B, C in [2,12] and b, c in the universe with B at most b-large
/// and C at most c-large, B + C is at most (b (+) c)-large.
///
/// At-most-largeness is closed under subsets, so a pair (B, C) with union U
/// exists iff some B' in U has B' admissible for b and U - B' admissible for
/// c; the sweep checks every U where the conclusion fails for such a split,
/// which covers every admissible pair. A direct call of check_union_bound
/// runs on every pair inside [2,7].
inline SuiteReport union_bound(const SuiteOptions& opt = {}, const std::vector<Ordinal>& universe = small_universe()) {
  using namespace detail;
  SuiteReport r("union-bound", opt);
  std::vector<UnionTable> tables;
  tables.reserve(universe.size());
  for (const auto& a : universe) tables.push_back(at_most_table(a));
  for (std::size_t i = 0; i < universe.size(); ++i)
    r.check(downward_closed(tables[i]), [&] { return "at-most table not closed under subsets for " + str(universe[i]); });
  // Spot-check the tables against the predicate.
  for (std::size_t i = 0; i < universe.size(); i += 17)
    for (Mask m = 0; m < (1u << union_bits); m += 5)
      r.check(tables[i][m] == is_at_most_large(mask_set(m, union_lo), universe[i]),
              [&] { return "at-most table mismatch at " + str(mask_set(m, union_lo)) + ", " + str(universe[i]); });

  // below[i][M] = number of C inside M at most universe[i]-large, so the
  // admissible disjoint pairs for (b, c) number sum_B t_b[B] * below_c[~B].
  constexpr Mask full = (1u << union_bits) - 1;
  std::vector<std::vector<std::uint32_t>> below(universe.size(), std::vector<std::uint32_t>(full + 1));
  std::vector<std::vector<std::uint32_t>> flags(universe.size(), std::vector<std::uint32_t>(full + 1));
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (Mask m = 0; m <= full; ++m) flags[i][m] = below[i][m] = tables[i][m];
    for (unsigned bit = 0; bit < union_bits; ++bit)
      for (Mask m = 0; m <= full; ++m)
        if ((m >> bit) & 1u) below[i][m] += below[i][m ^ (1u << bit)];
    std::reverse(below[i].begin(), below[i].end());  // indexed by complement
  }

  std::unordered_map<Ordinal, UnionTable> sums;
  for (std::size_t bi = 0; bi < universe.size(); ++bi) {
    for (std::size_t ci = 0; ci < universe.size(); ++ci) {
      std::uint64_t pairs = 0;
      for (Mask m = 0; m <= full; ++m) pairs += flags[bi][m] * below[ci][m];
      r.count(pairs);
      const Ordinal s = natural_sum(universe[bi], universe[ci]);
      // A union has at most 11 points; no proper part of it can be s-large.
      if (walk_weight(s) >= Nat(union_bits)) continue;
      auto it = sums.find(s);
      if (it == sums.end()) it = sums.emplace(s, at_most_table(s)).first;
      const UnionTable& ts = it->second;
      for (Mask u = 0; u < (1u << union_bits); ++u) {
        if (ts[u]) continue;
        for (Mask b = u;; b = (b - 1) & u) {
          if (tables[bi][b] && tables[ci][u ^ b]) {
            r.check(false, [&] {
              return "B = " + str(mask_set(b, union_lo)) + ", C = " + str(mask_set(u ^ b, union_lo)) +
                     ", b = " + str(universe[bi]) + ", c = " + str(universe[ci]);
            });
            break;
          }
          if (!b) break;
        }
      }
    }
  }

  const Ordinal w = Ordinal::omega();
  const std::vector<Ordinal> direct{Ordinal(), Ordinal::finite(1), Ordinal::finite(2), Ordinal::finite(3), Ordinal::finite(4),
                                    w, ordinary_sum(w, Ordinal::finite(1)), Ordinal::omega_power(Ordinal::finite(1), 2),
                                    Ordinal::omega_power(Ordinal::finite(2)),
                                    ordinary_sum(Ordinal::omega_power(Ordinal::finite(2)), w)};
  std::uint64_t direct_cases = 0;
  for (const auto& b : direct)
    for (const auto& c : direct)
      for (Mask bm = 0; bm < 64; ++bm) {
        const FinSet bs = mask_set(bm, union_lo);
        if (!is_at_most_large(bs, b)) continue;
        for (Mask cm = 0; cm < 64; ++cm) {
          const FinSet cs = mask_set(cm, union_lo);
          if (!is_at_most_large(cs, c)) continue;
          ++direct_cases;
          r.check(check_union_bound(bs, cs, b, c),
                  [&] { return "B = " + str(bs) + ", C = " + str(cs) + ", b = " + str(b) + ", c = " + str(c); });
        }
      }
  r.note("direct check_union_bound calls: " + std::to_string(direct_cases));
  return r;
}

// ---------------------------------------------------------------------------

/// For b > 0, x > 0: h_{b (+) a}(x) defined implies h_{{b}(x) (+) a}(h(x))
/// defined and no larger. Frames range over carriers in [1,14] with at most
/// seven points; only the points from x upward matter, so x = min carrier.
inline SuiteReport optimal_growth(const SuiteOptions& opt = {}, const std::vector<Ordinal>& universe = small_universe()) {
  SuiteReport r("optimal-growth", opt);
  constexpr unsigned top = 14, max_points = 7;
  std::vector<unsigned> path;
  for (const auto& b : universe) {
    if (b.is_zero()) continue;
    for (const auto& a : universe) {
      const Ordinal s = natural_sum(b, a);
      if (walk_weight(s) > Nat(max_points - 1)) continue;  // never defined on seven points
      // At a node the path ends in x_i; `left` is the state of s on arrival
      // at x_i and `right` that of {b}(x_0) (+) a, whose walk starts at x_1.
      auto rec = [&](auto&& self, const Ordinal& left, const Ordinal& right) -> void {
        if (left.is_zero()) {
          r.check(right.is_zero(), [&] {
            std::vector<Nat> pts(path.begin(), path.end());
            return "carrier " + str(FinSet(std::move(pts))) + ", b = " + str(b) + ", a = " + str(a);
          });
          return;
        }
        if (path.size() == max_points) return;
        const unsigned last = path.back();
        const Ordinal next_left = fundamental_step(left, last);
        const Ordinal next_right = fundamental_step(right, last);
        const unsigned room = std::min<unsigned>(max_points - static_cast<unsigned>(path.size()) - 1, top - last - 1);
        if (walk_weight(next_left) > Nat(room)) return;
        for (unsigned y = last + 1; y <= top; ++y) {
          path.push_back(y);
          self(self, next_left, next_right);
          path.pop_back();
        }
      };
      for (unsigned x0 = 1; x0 < top; ++x0) {
        const Ordinal left = fundamental_step(s, x0);
        const Ordinal right = natural_sum(fundamental_step(b, x0), a);
        if (walk_weight(left) > Nat(std::min(max_points - 2, top - x0 - 1))) continue;
        path.assign(1, x0);
        for (unsigned y = x0 + 1; y <= top; ++y) {
          path.push_back(y);
          rec(rec, left, right);
          path.pop_back();
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

/// The arrow and fundamental-sequence lemmas over the universe, x <= 6.
inline SuiteReport arrows(const SuiteOptions& opt = {}, const std::vector<Ordinal>& universe = small_universe()) {
  SuiteReport r("arrows", opt);
  constexpr unsigned max_x = 6;
  const std::size_t n = universe.size();
  const Ordinal one = Ordinal::finite(1);
  auto tag = [](const char* what, const Ordinal& a, const Ordinal& b, unsigned x) {
    return std::string(what) + ": a = " + str(a) + ", b = " + str(b) + ", x = " + std::to_string(x);
  };

  std::uint64_t zero_drops = 0, zero_arrow3 = 0;
  // arrow_table[x][i * n + j] = universe[i] =>_x universe[j]
  std::vector<std::vector<char>> table(max_x + 1, std::vector<char>(n * n));
  for (unsigned x = 0; x <= max_x; ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[x][i * n + j] = arrow(universe[i], universe[j], x);

  // meshing[i]: (l, universe[l] + universe[i]) for l != 0 with l >> universe[i]
  std::vector<std::vector<std::pair<std::size_t, Ordinal>>> meshing(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      if (!universe[l].is_zero() && much_greater(universe[l], universe[i]))
        meshing[i].emplace_back(l, ordinary_sum(universe[l], universe[i]));
  std::vector<Nat> norm(n);
  std::vector<Ordinal> succ(n), tower(n);
  for (std::size_t i = 0; i < n; ++i) {
    norm[i] = pseudo_norm(universe[i]);
    succ[i] = ordinary_sum(universe[i], one);
    tower[i] = Ordinal::omega_power(universe[i]);
  }

  for (unsigned x = 0; x <= max_x; ++x) {
    const Nat nx(x);
    for (std::size_t i = 0; i < n; ++i) {
      const Ordinal& a = universe[i];
      const Ordinal step = fundamental_step(a, x);
      for (std::size_t j = 0; j < n; ++j) {
        const Ordinal& b = universe[j];
        const bool ab = table[x][i * n + j];
        r.check(!ab || a >= b, [&] { return tag("arrow implies order", a, b, x); });
        if (norm[j] < nx && b <= a) {
          r.check(ab, [&] { return tag("arrow from pseudo-norm", a, b, x); });
          if (b != a)
            r.check(step >= b && ((step == b) == (a == succ[j])),
                    [&] { return tag("sequence versus pseudo-norm", a, b, x); });
        }
        if (!ab) continue;
        for (const auto& [l, lam_a] : meshing[i]) {
          const Ordinal& lam = universe[l];
          r.check(arrow(lam_a, ordinary_sum(lam, b), x),
                  [&] { return tag("basic arrow 1", a, b, x) + ", lambda = " + str(lam); });
        }
        const Ordinal& b1 = succ[j];
        if (a > b1) {
          // Fails at x = 0 once {a}(0) is read literally ({w^w}(0) = 1 =>_0 1,
          // yet w^w never reaches 2 at x = 1); counted, checked from x = 1.
          if (x >= 1)
            r.check(arrow(a, b1, x + 1), [&] { return tag("basic arrow 3", a, b, x); });
          else
            zero_arrow3 += !arrow(a, b1, x + 1);
        }
        if (x >= 1)
          r.check(arrow(tower[i], tower[j], x), [&] { return tag("basic arrow 4", a, b, x); });
      }
      for (unsigned l = 1; l <= 4; ++l)
        for (unsigned k = 0; k < l; ++k)
          r.check(arrow(Ordinal::omega_power(a, l), k ? Ordinal::omega_power(a, k) : Ordinal(), x),
                  [&] { return tag("basic arrow 2", a, Ordinal::finite(l), x) + ", k = " + std::to_string(k); });
      if (x >= 1)
        for (unsigned l = 1; l <= max_x; ++l)
          for (unsigned k = 0; k < l; ++k)
            r.check(arrow(fundamental_step(a, l), fundamental_step(a, k), x),
                    [&] { return tag("basic arrow 5", a, Ordinal::finite(l), x) + ", k = " + std::to_string(k); });
      const Nat& pa = norm[i];
      const Nat ps = pseudo_norm(step);
      // At x = 0 the step can drop several levels ({w^2}(0) = 0), so the
      // lower bound is checked from x = 1 on; the drops at 0 are counted.
      r.check(ps <= std::max(pa, Nat(x)), [&] { return tag("one-step pseudo-norm, upper", a, a, x); });
      if (x >= 1)
        r.check(pa <= ps + 1, [&] { return tag("one-step pseudo-norm, lower", a, a, x); });
      else
        zero_drops += pa > ps + 1;
      if (!a.is_zero())
        for (const auto& [l, lam_a] : meshing[i]) {
          const Ordinal& lam = universe[l];
          r.check(fundamental_step(lam_a, x) == ordinary_sum(lam, step),
                  [&] { return tag("mesh evaluation", lam, a, x); });
        }
    }
  }
  r.note("pseudo-norm drops by more than one at x = 0: " + std::to_string(zero_drops) + " ordinals");
  r.note("basic arrow 3 counterexamples at x = 0: " + std::to_string(zero_arrow3));
  return r;
}

// ---------------------------------------------------------------------------

/// Below w^w: w^0-large iff nonempty; w^{n+1}-large iff X - min X is
/// (w^n * min X)-large; w^n * k-large iff k separated w^n-large blocks
/// exist. Blocks are searched among runs of consecutive points of X, which
/// loses nothing since largeness passes to supersets.
inline SuiteReport blocks(const SuiteOptions& opt = {}) {
  SuiteReport r("blocks", opt);
  constexpr unsigned bits = 12;
  for (Mask m = 0; m < (1u << bits); ++m) {
    if (std::popcount(m) > 10) continue;
    const FinSet xs = mask_set(m, 1);
    r.check(is_large(xs, Ordinal::finite(1)) == !xs.empty(), [&] { return "w^0 at " + str(xs); });
    if (xs.empty()) continue;
    const std::size_t size = xs.size();
    for (unsigned n = 0; n <= 2; ++n) {
      r.check(is_large(xs, omega_pow(n + 1)) == is_large(xs.without_min(), omega_pow(n, xs.min())),
              [&] { return "w^(n+1) at " + str(xs) + ", n = " + std::to_string(n); });
      // run_large[s * size + e]: points s..e form a w^n-large set.
      std::vector<char> run_large(size * size, 0);
      for (std::size_t s = 0; s < size; ++s) {
        Ordinal state = omega_pow(n);
        for (std::size_t e = s; e < size; ++e) {
          state = fundamental_step(state, xs[e]);
          run_large[s * size + e] = state.is_zero();
        }
      }
      auto blocks_exist = [&](auto&& self, std::size_t from, unsigned k) -> bool {
        if (k == 0) return true;
        for (std::size_t s = from; s < size; ++s)
          for (std::size_t e = s; e < size; ++e)
            if (run_large[s * size + e] && self(self, e + 1, k - 1)) return true;
        return false;
      };
      for (unsigned k = 1; k <= 3; ++k)
        r.check(is_large(xs, omega_pow(n, k)) == blocks_exist(blocks_exist, 0, k), [&] {
          return "w^n*k at " + str(xs) + ", n = " + std::to_string(n) + ", k = " + std::to_string(k);
        });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

inline std::vector<Ordinal> split_ordinals() {
  const Ordinal w = Ordinal::omega();
  return {Ordinal::finite(1), Ordinal::finite(2), Ordinal::finite(3), w, Ordinal::omega_power(Ordinal::finite(1), 2)};
}

/// Every X in [2,10] and a, b in {1, 2, 3, w, w*2}.
inline SuiteReport splitting(const SuiteOptions& opt = {}) {
  SuiteReport r("splitting", opt);
  const auto ords = split_ordinals();
  for (Mask m = 0; m < (1u << 9); ++m) {
    const FinSet xs = mask_set(m, 2);
    for (const auto& a : ords)
      for (const auto& b : ords) {
        auto tag = [&] { return "X = " + str(xs) + ", a = " + str(a) + ", b = " + str(b); };
        const Ordinal s = natural_sum(a, b);
        if (!is_large(xs, s)) {
          r.check(throws_code([&] { split(xs, a, b); }, ErrorCode::NotLargeEnough), tag);
          continue;
        }
        try {
          const SplitWitness w = split(xs, a, b);
          r.check(w.left == xs.prefix(w.left.size()) && set_union(w.left, w.right) == xs &&
                      is_exactly_large(w.left, a) && is_large(w.right, b),
                  tag);
        } catch (const Error& e) {
          r.check(false, [&] { return tag() + ": " + e.what(); });
        }
        // With b >> a the converse holds: an exactly a-large prefix followed by a b-large rest.
        if (much_greater(b, a)) {
          if (auto len = large_prefix_length(xs, a); len && is_large(xs.suffix_from(*len), b))
            r.check(is_large(xs, s), [&] { return "converse: " + tag(); });
        }
      }
  }
  return r;
}

/// Every pair of disjoint X0, X1 in [2,10]; the second form also adds a
/// top point star, tried at max + 1 and at 11.
inline SuiteReport pigeonhole(const SuiteOptions& opt = {}) {
  SuiteReport r("pigeonhole", opt);
  const auto ords = split_ordinals();
  constexpr unsigned points = 9, lo = 2;
  std::uint32_t total = 1;
  for (unsigned i = 0; i < points; ++i) total *= 3;
  for (std::uint32_t code = 0; code < total; ++code) {
    std::vector<Nat> v0, v1;
    std::uint32_t c = code;
    for (unsigned i = 0; i < points; ++i, c /= 3) {
      if (c % 3 == 1) v0.emplace_back(lo + i);
      if (c % 3 == 2) v1.emplace_back(lo + i);
    }
    const FinSet x0(std::move(v0)), x1(std::move(v1));
    const FinSet both = set_union(x0, x1);
    std::vector<Nat> stars;
    const Nat top = both.empty() ? Nat(lo) : both.max() + 1;
    stars.push_back(top);
    if (top < 11) stars.emplace_back(11);
    if (!both.empty())
      r.check(throws_code([&] { pigeonhole_v2(x0, x1, both.max(), ords[0], ords[0]); }, ErrorCode::BadStar),
              [&] { return "star at max accepted for " + str(x0) + " | " + str(x1); });
    for (const auto& a : ords)
      for (const auto& b : ords) {
        const Ordinal s = natural_sum(a, b);
        auto tag = [&] { return "X0 = " + str(x0) + ", X1 = " + str(x1) + ", a = " + str(a) + ", b = " + str(b); };
        if (is_large(both, s)) {
          try {
            const auto v = pigeonhole_v1(x0, x1, a, b);
            bool ok = false;
            switch (v) {
              case PigeonholeVerdict::LeftLarge: ok = !x0.empty() && is_large(x0.without_max(), a); break;
              case PigeonholeVerdict::RightLarge: ok = !x1.empty() && is_large(x1.without_max(), b); break;
              case PigeonholeVerdict::BothExact: ok = is_exactly_large(x0, a) && is_exactly_large(x1, b); break;
            }
            r.check(ok, [&] { return "first form, " + tag() + ", verdict " + to_string(v); });
          } catch (const Error& e) {
            r.check(false, [&] { return "first form, " + tag() + ": " + e.what(); });
          }
        } else {
          r.check(throws_code([&] { pigeonhole_v1(x0, x1, a, b); }, ErrorCode::NotLargeEnough),
                  [&] { return "first form accepted a small set, " + tag(); });
        }
        for (const auto& star : stars) {
          if (!is_large(both.with(star), s)) {
            r.check(throws_code([&] { pigeonhole_v2(x0, x1, star, a, b); }, ErrorCode::NotLargeEnough),
                    [&] { return "second form accepted a small set, " + tag() + ", star = " + star.str(); });
            continue;
          }
          try {
            const auto v = pigeonhole_v2(x0, x1, star, a, b);
            const bool ok = v == PigeonholeVerdict::LeftLarge ? is_large(x0, a)
                                                              : v == PigeonholeVerdict::RightLarge && is_large(x1, b);
            r.check(ok, [&] { return "second form, " + tag() + ", star = " + star.str(); });
          } catch (const Error& e) {
            r.check(false, [&] { return "second form, " + tag() + ", star = " + star.str() + ": " + e.what(); });
          }
        }
      }
  }
  return r;
}

// ---------------------------------------------------------------------------

inline bool has_monochromatic_triangle(const Coloring& f) {
  const std::size_t n = f.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (f.at(a, b) == f.at(a, c) && f.at(a, b) == f.at(b, c)) return true;
  return false;
}

/// R_2(3) = 6 by enumeration, and the matching statement verdicts.
inline SuiteReport rt_micro(const SuiteOptions& opt = {}) {
  SuiteReport r("rt-micro", opt);
  const FinSet five = FinSet::interval(1, 5), six = FinSet::interval(1, 6);
  std::uint64_t triangle_free = 0;
  Coloring f5 = Coloring::from_code(five, 2, 2, std::uint64_t{0});
  for (std::uint64_t code = 0; code < (1u << 10); ++code) {
    f5.set_code(code);
    triangle_free += !has_monochromatic_triangle(f5);
  }
  r.count(1u << 10);
  r.check(triangle_free > 0, [] { return "every 2-coloring of 5 points has a monochromatic triangle"; });
  Coloring f6 = Coloring::from_code(six, 2, 2, std::uint64_t{0});
  for (std::uint64_t code = 0; code < (1u << 15); ++code) {
    f6.set_code(code);
    r.check(has_monochromatic_triangle(f6), [&] { return "triangle-free 2-coloring of 6 points, code " + std::to_string(code); });
  }
  r.check(ramsey_exact_small(2, 3) == 6, [] { return "ramsey_exact_small(2, 3) != 6"; });
  r.note("triangle-free colorings of 5 points: " + std::to_string(triangle_free));

  const Statement rt2{StatementKind::RT2, 2};
  const auto on_six = is_stmt_alpha_large(six, rt2, Ordinal::finite(3));
  r.check(on_six.holds && on_six.colorings_checked == (1u << 15), [] { return "{1..6} should be RT2_2-3-large"; });
  const auto on_five = is_stmt_alpha_large(five, rt2, Ordinal::finite(3));
  r.check(!on_five.holds && on_five.counterexample, [] { return "{1..5} should not be RT2_2-3-large"; });
  if (on_five.counterexample)
    r.check(!has_monochromatic_triangle(Coloring::from_code(five, 2, 2, *on_five.counterexample)),
            [] { return "reported counterexample has a monochromatic triangle"; });
  return r;
}

// ---------------------------------------------------------------------------

inline bool grouping_holds(const Grouping& g, const Coloring& f, const FinSet& xs, unsigned d) {
  if (g.blocks.size() != d) return false;
  for (std::size_t s = 0; s < d; ++s) {
    if (g.blocks[s].size() != 2 || !g.blocks[s].is_subset_of(xs)) return false;
    for (std::size_t t = s + 1; t < d; ++t)
      for (const auto& x : g.blocks[s])
        for (const auto& y : g.blocks[t])
          if (f(x, y) != g.color) return false;
  }
  return true;
}

inline bool has_homogeneous(const Coloring& f, std::size_t size) {
  return leftmost_homogeneous(f, f.carrier(), size).has_value();
}

/// The grouping construction at n = 0, k = 2, d = 2: sampled colorings of
/// 18 = R_2(4) points, then every coloring of 6 points with R_2(4) assumed
/// to be 6, where the construction must succeed exactly when a homogeneous
/// 4-set exists.
inline SuiteReport grouping_micro(const SuiteOptions& opt = {}) {
  SuiteReport r("grouping", opt);
  const FinSet carrier = FinSet::interval(1, 18);
  std::mt19937_64 rng(opt.seed);
  std::vector<Coloring::Color> colors;
  for (std::uint64_t sample = 0; sample < opt.samples; ++sample) {
    colors.clear();
    for (std::size_t i = 0; i < 153; i += 64) {
      std::uint64_t word = rng();
      for (std::size_t b = 0; b < 64 && i + b < 153; ++b) colors.push_back(static_cast<Coloring::Color>((word >> b) & 1u));
    }
    std::size_t next = 0;
    const Coloring f = Coloring::pairs(carrier, 2, [&](const Nat&, const Nat&) { return colors[next++]; });
    try {
      const Grouping g = grouping(carrier, f, 0, 2, 2, AssumingModel{});
      r.check(grouping_holds(g, f, carrier, 2) && g.ramsey.value == 18, [&] { return "sample " + std::to_string(sample); });
    } catch (const Error& e) {
      r.check(false, [&] { return "sample " + std::to_string(sample) + ": " + e.what(); });
    }
  }

  const FinSet six = FinSet::interval(1, 6);
  AssumingModel scaled;
  scaled.ramsey_override[{Nat(2), Nat(4)}] = 6;
  std::uint64_t certified = 0, refused = 0;
  Coloring f = Coloring::from_code(six, 2, 2, std::uint64_t{0});
  for (std::uint64_t code = 0; code < (1u << 15); ++code) {
    f.set_code(code);
    const bool oracle = has_homogeneous(f, 4);
    bool produced = false, ok = true;
    try {
      const Grouping g = grouping(six, f, 0, 2, 2, scaled);
      produced = true;
      ok = grouping_holds(g, f, six, 2) && g.ramsey.source == RamseySource::Assumed;
    } catch (const Error& e) {
      ok = e.code() == ErrorCode::PreconditionViolated;
    }
    (produced ? certified : refused) += 1;
    r.check(ok && produced == oracle, [&] { return "six points, code " + std::to_string(code); });
  }
  r.note("six points: " + std::to_string(certified) + " certified, " + std::to_string(refused) + " refused");
  return r;
}

// ---------------------------------------------------------------------------

/// Every fallow set is transitive: carriers of at most five points, k <= 3.
inline SuiteReport fallow_transitive(const SuiteOptions& opt = {}) {
  SuiteReport r("fallow-transitive", opt);
  for (unsigned size = 0; size <= 5; ++size) {
    const FinSet carrier = size ? FinSet::interval(1, size) : FinSet{};
    const unsigned cells = size * (size - (size > 0)) / 2;
    for (Coloring::Color k = 1; k <= 3; ++k) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < cells; ++i) total *= k;
      Coloring f = Coloring::from_code(carrier, 2, k, std::uint64_t{0});
      for (std::uint64_t code = 0; code < total; ++code) {
        f.set_code(code);
        for (Mask m = 0; m < (1u << size); ++m) {
          const FinSet h = mask_set(m, 1);
          r.check(!is_fallow_set(f, h) || is_transitive_set(f, h),
                  [&] { return "H = " + str(h) + ", k = " + std::to_string(k) + ", code " + std::to_string(code); });
        }
      }
    }
  }
  const Coloring strict = Coloring::pairs(FinSet{1, 2, 3}, 3, [](const Nat& x, const Nat& y) -> Coloring::Color {
    if (x == 1 && y == 2) return 0;
    if (x == 2) return 1;
    return 2;
  });
  r.check(is_transitive_set(strict, strict.carrier()) && !is_fallow_set(strict, strict.carrier()),
          [] { return "the three-color triangle should be transitive and not fallow"; });
  return r;
}

// ---------------------------------------------------------------------------

struct PipelineCase {
  std::string name;
  Nat min_bound;
  std::function<Ordinal(unsigned n, unsigned k)> hypothesis;
  std::function<FinSet(const FinSet&, const Coloring&, unsigned n, unsigned k, const PipelineDeps&)> run;
  bool needs_transitive;
  unsigned fixed_k;  // 0 when k is free
};

inline std::vector<PipelineCase> pipeline_cases() {
  return {
      {"fEM", 7, [](unsigned n, unsigned) { return omega_pow(n + 3); },
       [](const FinSet& xs, const Coloring& f, unsigned n, unsigned, const PipelineDeps& d) { return em_pipeline(xs, f, n, d); },
       false, 0},
      {"trRT", 8, [](unsigned n, unsigned k) { return omega_pow(n * k + 3); },
       [](const FinSet& xs, const Coloring& f, unsigned n, unsigned k, const PipelineDeps& d) {
         return trrt_pipeline(xs, f, n, k, d);
       },
       true, 0},
      {"ADS", 9, [](unsigned n, unsigned) { return omega_pow(2 * n + 3); },
       [](const FinSet& xs, const Coloring& f, unsigned n, unsigned, const PipelineDeps& d) { return ads_pipeline(xs, f, n, d); },
       true, 2},
      {"RT2", 17, [](unsigned n, unsigned k) { return omega_pow(k * n + 3); },
       [](const FinSet& xs, const Coloring& f, unsigned n, unsigned k, const PipelineDeps& d) {
         return rt2_pipeline(xs, f, n, k, d);
       },
       false, 0},
  };
}

/// Colorings for the micro runs: constant, colored by the smaller point
/// (fallow everywhere), by comparing a shuffled rank (transitive, two
/// colors), and uniformly random when transitivity is not needed.
inline std::vector<Coloring> micro_colorings(const FinSet& xs, unsigned k, bool transitive, std::mt19937_64& rng,
                                             unsigned random_count) {
  std::vector<Coloring> out;
  out.push_back(Coloring::pairs(xs, k, [](const Nat&, const Nat&) { return 0u; }));
  out.push_back(Coloring::pairs(xs, k, [k](const Nat& x, const Nat&) {
    return static_cast<Coloring::Color>(static_cast<std::uint64_t>(x % k));
  }));
  if (k >= 2) {
    std::vector<std::uint64_t> rank(xs.size());
    for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = i;
    std::shuffle(rank.begin(), rank.end(), rng);
    out.push_back(Coloring::pairs(xs, k, [&](const Nat& x, const Nat& y) -> Coloring::Color {
      const auto rx = rank[static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin())];
      const auto ry = rank[static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), y) - xs.begin())];
      return rx > ry ? 1 : 0;
    }));
  }
  if (!transitive)
    for (unsigned i = 0; i < random_count; ++i)
      out.push_back(Coloring::pairs(xs, k, [&](const Nat&, const Nat&) { return static_cast<Coloring::Color>(rng() % k); }));
  return out;
}

/// Gates, micro-scale chaining and real-scale infeasibility of the four
/// pipelines.
inline SuiteReport pipelines(const SuiteOptions& opt = {}) {
  SuiteReport r("pipelines", opt);
  const PipelineDeps micro = micro_deps();
  std::mt19937_64 rng(opt.seed);
  for (const auto& pc : pipeline_cases()) {
    for (unsigned n = 1; n <= 2; ++n)
      for (unsigned k = 1; k <= 3; ++k) {
        if (pc.fixed_k && k != pc.fixed_k) continue;
        // Random colorings need a fallow (2^{kn}+1)-set among 4*2^{kn}+1
        // points in the full pipeline; only small kn keeps that likely.
        const unsigned random_count = pc.name == "RT2" ? (k * n <= 2 ? 8 : 0) : (n == 1 ? 8 : 0);
        const Ordinal hyp = pc.hypothesis(n, k);
        const std::size_t need = largeness::detail::micro_size(hyp);
        const FinSet ok = FinSet::interval(pc.min_bound, pc.min_bound + need - 1);
        const FinSet low = FinSet::interval(pc.min_bound - 1, pc.min_bound + need - 2);
        const FinSet short_set = FinSet::interval(pc.min_bound, pc.min_bound + need - 2);
        auto tag = [&](const std::string& what) {
          return pc.name + " n = " + std::to_string(n) + " k = " + std::to_string(k) + ": " + what;
        };
        const Coloring zero = Coloring::pairs(FinSet::interval(pc.min_bound - 1, pc.min_bound + need), k,
                                              [](const Nat&, const Nat&) { return 0u; });
        r.check(throws_code([&] { pc.run(low, zero, n, k, micro); }, ErrorCode::MinTooSmall),
                [&] { return tag("gate accepted min X = " + Nat(pc.min_bound - 1).str()); });
        r.check(throws_code([&] { pc.run(short_set, zero, n, k, micro); }, ErrorCode::NotLargeEnough),
                [&] { return tag("gate accepted a set one point short"); });
        for (const auto& f : micro_colorings(ok, k, pc.needs_transitive, rng, random_count)) {
          try {
            const FinSet h = pc.run(ok, f, n, k, micro);
            const bool kind_ok = pc.name == "fEM" ? is_fallow_set(f, h) : is_homogeneous(f, h).holds;
            r.check(kind_ok && h.is_subset_of(ok) && micro_is_large(h, omega_pow(n)),
                    [&] { return tag("witness " + str(h) + " does not certify"); });
          } catch (const Error& e) {
            r.check(false, [&] { return tag(std::string("micro run failed: ") + e.what()); });
          }
        }
      }
    // The real constructions on the real scale.
    const unsigned k = pc.fixed_k ? pc.fixed_k : 1;
    r.check(throws_code([&] { real_instance(pc.min_bound, pc.hypothesis(1, k)); }, ErrorCode::InfeasibleScale),
            [&] { return pc.name + ": real instance did not report InfeasibleScale"; });
    const FinSet small = FinSet::interval(pc.min_bound, pc.min_bound + 40);
    const Coloring zero = Coloring::pairs(FinSet::interval(pc.min_bound - 1, pc.min_bound + 40), k,
                                          [](const Nat&, const Nat&) { return 0u; });
    r.check(throws_code([&] { pc.run(small, zero, 1, k, standard_deps()); }, ErrorCode::NotLargeEnough),
            [&] { return pc.name + ": real gate accepted a desk-scale set"; });
    r.check(throws_code([&] { pc.run(FinSet::interval(pc.min_bound - 1, pc.min_bound + 40), zero, 1, k, standard_deps()); },
                        ErrorCode::MinTooSmall),
            [&] { return pc.name + ": real gate accepted min X = " + Nat(pc.min_bound - 1).str(); });
  }
  return r;
}

}  // namespace suites

}  // namespace largeness
