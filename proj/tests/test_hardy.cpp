#include <catch_amalgamated.hpp>

#include <bit>
#include <optional>

#include "largeness/hardy.hpp"
#include "largeness/largeness.hpp"
#include "largeness/ordinal_io.hpp"
#include "largeness/universe.hpp"

using namespace largeness;
using namespace largeness::literals;

namespace {

// Independent oracle: the recursion h_a(x) = h_{a}(x)(next x), unfolded by hand
// on the positions of the carrier.
std::optional<Nat> oracle(const FinSet& carrier, Ordinal a, std::size_t i) {
  while (!a.is_zero()) {
    if (i + 1 >= carrier.size()) return std::nullopt;
    a = fundamental_step(a, carrier[i]);
    ++i;
  }
  return carrier[i];
}

std::vector<FinSet> small_frames() {
  std::vector<FinSet> out;
  for (unsigned m = 1; m < (1u << 9); ++m) {
    if (std::popcount(m) > 5) continue;
    std::vector<Nat> pts;
    for (unsigned i = 0; i < 9; ++i)
      if ((m >> i) & 1u) pts.emplace_back(i + 1);
    out.emplace_back(std::move(pts));
  }
  return out;
}

std::vector<Ordinal> sample_universe() {
  std::vector<Ordinal> out;
  const auto u = small_universe();
  for (std::size_t i = 0; i < u.size(); i += 11) out.push_back(u[i]);
  return out;
}

}  // namespace

TEST_CASE("hardy examples", "[hardy]") {
  const HardyFrame f(FinSet{3, 5, 6, 7, 8});
  CHECK(hardy_eval(f, Ordinal(), 6).value() == 6);
  CHECK(hardy_eval(f, "w"_ord, 3).value() == 8);
  CHECK_FALSE(hardy_eval(f, "w+1"_ord, 3).is_defined());
  CHECK(hardy_eval(HardyFrame(FinSet{3, 5}), "1"_ord, 3).value() == 5);
}

TEST_CASE("hardy trace examples", "[hardy]") {
  using Trace = std::vector<std::pair<Ordinal, Nat>>;
  CHECK(hardy_trace(HardyFrame(FinSet{3, 5}), "1"_ord, 3) == Trace{{"1"_ord, 3}, {Ordinal(), 5}});
  CHECK(hardy_trace(HardyFrame(FinSet{3, 5, 6, 7, 8}), "w"_ord, 3) ==
        Trace{{"w"_ord, 3}, {"3"_ord, 5}, {"2"_ord, 6}, {"1"_ord, 7}, {Ordinal(), 8}});
  CHECK(hardy_trace(HardyFrame(FinSet{3}), "1"_ord, 3) == Trace{{"1"_ord, 3}});
}

TEST_CASE("hardy errors", "[hardy]") {
  const HardyFrame f(FinSet{3, 5});
  try {
    hardy_eval(f, "w"_ord, 4);
    FAIL("expected NotInCarrier");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInCarrier);
  }
  CHECK_THROWS_AS(HardyFrame(FinSet{}), Error);
}

TEST_CASE("hardy agrees with the unfolded recursion", "[hardy]") {
  const auto ords = sample_universe();
  for (const auto& carrier : small_frames()) {
    const HardyFrame frame(carrier);
    for (const auto& a : ords)
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        const auto got = hardy_eval(frame, a, carrier[i]);
        const auto want = oracle(carrier, a, i);
        REQUIRE(got.is_defined() == want.has_value());
        if (want) REQUIRE(got.value() == *want);
        const auto trace = hardy_trace(frame, a, carrier[i]);
        REQUIRE(trace.back().first.is_zero() == got.is_defined());
      }
  }
}

TEST_CASE("hierarchy properties on small frames", "[hardy]") {
  const auto ords = sample_universe();
  for (const auto& carrier : small_frames()) {
    const HardyFrame frame(carrier);
    for (const auto& a : ords) {
      std::optional<Nat> previous;
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        const auto r = hardy_eval(frame, a, carrier[i]);
        if (!r.is_defined()) continue;
        const Nat& v = r.value();
        CHECK(v >= pseudo_norm(a) + carrier[i]);
        if (!a.is_zero()) {
          REQUIRE(i + 1 < carrier.size());
          CHECK(v >= carrier[i + 1]);
          if (previous) CHECK(v > *previous);
          previous = v;
        }
        // Defined at the next point implies defined here.
        if (i > 0 && !a.is_zero()) CHECK(hardy_eval(frame, a, carrier[i - 1]).is_defined());
        for (const auto& b : ords) {
          if (!arrow(a, b, carrier[i])) continue;
          const auto rb = hardy_eval(frame, b, carrier[i]);
          REQUIRE(rb.is_defined());
          CHECK(rb.value() <= v);
        }
      }
    }
  }
}

TEST_CASE("composition for meshing sums", "[hardy]") {
  const auto ords = sample_universe();
  for (const auto& carrier : small_frames()) {
    const HardyFrame frame(carrier);
    for (const auto& b : ords)
      for (const auto& a : ords) {
        if (!much_greater(b, a)) continue;
        for (const auto& x : carrier) {
          const auto whole = hardy_eval(frame, ordinary_sum(b, a), x);
          if (!whole.is_defined()) continue;
          const auto inner = hardy_eval(frame, a, x);
          REQUIRE(inner.is_defined());
          const auto outer = hardy_eval(frame, b, inner.value());
          REQUIRE(outer.is_defined());
          CHECK(outer.value() == whole.value());
        }
      }
  }
}

TEST_CASE("at most large iff undefined at the minimum", "[hardy][largeness]") {
  const auto ords = sample_universe();
  for (const auto& carrier : small_frames())
    for (const auto& a : ords) {
      if (a.is_zero()) continue;
      CHECK(is_at_most_large(carrier, a) == !hardy_eval(HardyFrame(carrier), a, carrier.min()).is_defined());
    }
}
