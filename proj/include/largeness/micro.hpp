#pragma once

#include <vector>

#include "largeness/pipelines.hpp"

namespace largeness {

/// mu(a) = sum of c * 2^e over the terms w^e * c of a, for a < w^w. The
/// micro scale replaces "a-large" by "at least mu(a) points", which keeps
/// the shape of every pipeline while shrinking instances to a few dozen points.
inline Nat micro_measure(const Ordinal& a) {
  Nat out = 0;
  for (const auto& t : a.terms()) {
    auto e = t.exponent.as_finite();
    require(e && fits_u64(*e) && *e < 64, ErrorCode::Unsupported, "micro scale needs finite small exponents");
    out += t.coefficient << static_cast<unsigned>(to_u64(*e));
  }
  return out;
}

inline bool micro_is_large(const FinSet& xs, const Ordinal& a) { return Nat(xs.size()) >= micro_measure(a); }

namespace detail {

/// The lexicographically least subset of `within` with `size` points on
/// which `kind` holds. Both predicates are hereditary, so each new point is
/// checked against the chosen ones only.
inline std::optional<FinSet> leftmost_satisfying(const Coloring& f, const FinSet& within, std::size_t size,
                                                 WitnessKind kind) {
  const auto pos = positions_in(f, within);
  std::vector<std::size_t> chosen;
  auto fits = [&](std::size_t c) {
    for (std::size_t a = 0; a < chosen.size(); ++a)
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        const auto xy = f.at(chosen[a], chosen[b]), yz = f.at(chosen[b], c), xz = f.at(chosen[a], c);
        if (kind == WitnessKind::Fallow && xz != xy && xz != yz) return false;
        if (kind == WitnessKind::Transitive && xy == yz && xz != xy) return false;
      }
    if (kind == WitnessKind::Homogeneous && !chosen.empty()) {
      const auto col = chosen.size() > 1 ? f.at(chosen[0], chosen[1]) : f.at(chosen[0], c);
      for (auto a : chosen)
        if (f.at(a, c) != col) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == size) return true;
    for (std::size_t i = from; i + (size - chosen.size()) <= pos.size(); ++i) {
      if (!fits(pos[i])) continue;
      chosen.push_back(pos[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  std::vector<Nat> pts;
  for (auto i : chosen) pts.push_back(f.carrier()[i]);
  return FinSet(std::move(pts));
}

inline std::size_t micro_size(const Ordinal& a) { return small_count(micro_measure(a), "micro size"); }

inline FinSet micro_search(const Coloring& f, const FinSet& ys, const Ordinal& a, WitnessKind kind) {
  auto h = leftmost_satisfying(f, ys, micro_size(a), kind);
  if (!h) fail(ErrorCode::PreconditionViolated, "micro search: no " + to_string(kind) + " subset of the required size");
  return *h;
}

}  // namespace detail

/// Pipeline steps at the micro scale: prefixes stand in for sparse subsets
/// and exhaustive searches for the fallow and transitive constructions.
inline PipelineDeps micro_deps() {
  return PipelineDeps{
      micro_is_large,
      [](const FinSet& xs, unsigned m, unsigned l) {
        const std::size_t need = detail::micro_size(ordinary_sum(omega_pow(m, l), Ordinal::finite(1)));
        require(xs.size() >= need, ErrorCode::NotLargeEnough, "micro sparse subset: too few points");
        return xs.prefix(need);
      },
      [](const FinSet& ys, const Coloring& f, unsigned n) {
        return detail::micro_search(f, ys, omega_pow(n), WitnessKind::Fallow);
      },
      [](const FinSet& ys, const Coloring& f, unsigned n) {
        return detail::micro_search(f, ys, ordinary_sum(omega_pow(n), Ordinal::finite(1)), WitnessKind::Fallow);
      },
      [](const FinSet& ys, const Coloring& f, unsigned n, unsigned) {
        require(is_transitive_set(f, ys), ErrorCode::NotTransitive, "micro trRT: coloring is not transitive");
        return detail::micro_search(f, ys, omega_pow(n), WitnessKind::Homogeneous);
      },
  };
}

}  // namespace largeness
