#include <catch_amalgamated.hpp>

#include <unordered_set>

#include "largeness/fundamental.hpp"
#include "largeness/ordinal_io.hpp"
#include "largeness/universe.hpp"

using namespace largeness;
using namespace largeness::literals;

TEST_CASE("fundamental step examples", "[fundamental]") {
  CHECK(fundamental_step("w"_ord, 1) == "1"_ord);
  CHECK(fundamental_step("10"_ord, 1) == "9"_ord);
  CHECK(fundamental_step(Ordinal(), 5) == Ordinal());
  CHECK(fundamental_step("w^w"_ord, 2) == "w^2"_ord);
  CHECK(fundamental_step("w^2*3+w"_ord, 4) == "w^2*3+4"_ord);
  CHECK(fundamental_step("w^3"_ord, 4) == "w^2*4"_ord);
  CHECK(fundamental_step("w^(w+1)"_ord, 2) == "w^w*2"_ord);
  CHECK(fundamental_step("w^(w*2)"_ord, 3) == "w^(w+3)"_ord);
}

TEST_CASE("index 0 follows the definition literally", "[fundamental]") {
  CHECK(fundamental_step("w"_ord, 0) == Ordinal());
  CHECK(fundamental_step("w^2+w"_ord, 0) == "w^2"_ord);
  CHECK(fundamental_step("w^w"_ord, 0) == "1"_ord);
  CHECK(fundamental_step("w^(w^w)"_ord, 0) == "w"_ord);
}

TEST_CASE("fundamental walk examples", "[fundamental]") {
  const Ordinal w = "w"_ord;
  CHECK(fundamental_walk(w, FinSet{}) == w);
  CHECK(fundamental_walk(w, FinSet{3, 5, 6, 7}) == Ordinal());
  CHECK(fundamental_walk(w, FinSet{3, 5, 6}) == "1"_ord);
}

TEST_CASE("arrow examples", "[fundamental][arrow]") {
  CHECK(arrow("w^2+3"_ord, "w^2+3"_ord, 7));
  CHECK(arrow("w"_ord, "1"_ord, 1));
  CHECK_FALSE(arrow("w"_ord, "2"_ord, 1));
  CHECK_FALSE(arrow("2"_ord, "w"_ord, 1));
  // w^2 at 2: w*2, w+2, w+1, w, 2, 1, 0
  CHECK(arrow("w^2"_ord, "w+1"_ord, 2));
  CHECK(arrow("w^2"_ord, "w*2"_ord, 2));
  CHECK_FALSE(arrow("w^2"_ord, "w*2+1"_ord, 2));
  CHECK_FALSE(arrow("w^2"_ord, "w+3"_ord, 2));
}

TEST_CASE("arrow agrees with iteration on the small universe", "[fundamental][arrow]") {
  const auto universe = small_universe();
  constexpr std::size_t max_chain = 3000;
  std::size_t complete = 0, truncated = 0, mismatches = 0;
  for (const auto& b : universe) {
    for (int x = 0; x <= 3; ++x) {
      std::unordered_set<Ordinal> chain;
      Ordinal c = b;
      bool finished = false;
      for (std::size_t steps = 0; steps < max_chain; ++steps) {
        chain.insert(c);
        if (c.is_zero()) {
          finished = true;
          break;
        }
        c = fundamental_step(c, x);
      }
      for (const auto& a : chain)
        if (!arrow(b, a, x)) ++mismatches;
      if (!finished) {
        ++truncated;
        continue;
      }
      ++complete;
      for (const auto& a : universe)
        if (arrow(b, a, x) != chain.contains(a)) ++mismatches;
    }
  }
  INFO("complete " << complete << ", truncated " << truncated);
  CHECK(mismatches == 0);
  CHECK(complete > 3000);
}

TEST_CASE("arrow agrees with bounded iteration on deeper ordinals", "[fundamental][arrow]") {
  const auto u = ordinal_universe({Ordinal(), "1"_ord, "w"_ord, "w^w"_ord, "w^(w+1)"_ord}, 2, 2);
  std::size_t decided = 0, mismatches = 0;
  for (const auto& b : u)
    for (const auto& a : u)
      for (int x = 0; x <= 4; ++x) {
        auto by_iteration = arrow_by_iteration(b, a, x, 3000);
        if (!by_iteration) continue;
        ++decided;
        if (arrow(b, a, x) != *by_iteration) ++mismatches;
      }
  INFO("decided " << decided);
  CHECK(mismatches == 0);
  CHECK(decided > 5000);
}

TEST_CASE("predecessor", "[fundamental]") {
  CHECK(predecessor("w+1"_ord) == "w"_ord);
  CHECK(predecessor("w*2+3"_ord) == "w*2+2"_ord);
  CHECK_THROWS_AS(predecessor("w"_ord), Error);
}
