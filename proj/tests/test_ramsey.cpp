#include <catch_amalgamated.hpp>

#include <cmath>

#include "largeness/ordinal_io.hpp"
#include "largeness/ramsey.hpp"
#include "largeness/ramsey_numbers.hpp"

using namespace largeness;
using namespace largeness::literals;

namespace {

bool triangle_free(const Coloring& f) {
  const std::size_t n = f.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (f.at(a, b) == f.at(a, c) && f.at(a, b) == f.at(b, c)) return false;
  return true;
}

}  // namespace

TEST_CASE("ramsey numbers", "[ramsey]") {
  CHECK(ramsey_upper(2, 2) == 16);
  CHECK(ramsey_upper(1, 7) == 1);
  CHECK(ramsey_upper(3, 2) == 729);
  CHECK(ramsey_exact_small(2, 2) == 2);
  CHECK(ramsey_exact_small(2, 3) == 6);
  CHECK(ramsey_exact_small(2, 4) == 18);
  CHECK_THROWS_AS(ramsey_exact_small(2, 5), Error);
  CHECK(ramsey_for_construction(2, 3).source == RamseySource::ExactTable);
  CHECK(ramsey_for_construction(2, 6).source == RamseySource::UpperBound);
  CHECK(ramsey_for_construction(2, 6).value == 4096);
}

TEST_CASE("R_2(3) = 6 by enumeration", "[ramsey]") {
  std::size_t free5 = 0;
  for (std::uint64_t code = 0; code < (1u << 10); ++code)
    free5 += triangle_free(Coloring::from_code(FinSet::interval(1, 5), 2, 2, code));
  CHECK(free5 > 0);
  Coloring f = Coloring::from_code(FinSet::interval(1, 6), 2, 2, std::uint64_t{0});
  for (std::uint64_t code = 0; code < (1u << 15); ++code) {
    f.set_code(code);
    REQUIRE_FALSE(triangle_free(f));
  }
}

TEST_CASE("large homogeneous search", "[ramsey]") {
  const Coloring zero = Coloring::pairs(FinSet::interval(3, 8), 2, [](const Nat&, const Nat&) { return 0u; });
  const auto all = find_large_homogeneous(zero, "w"_ord, WitnessKind::Homogeneous);
  REQUIRE(all);
  CHECK(all->subset == zero.carrier());
  CHECK(all->color == 0u);

  const Coloring checker = Coloring::pairs(FinSet{1, 2, 3}, 2, [](const Nat& x, const Nat& y) {
    return x == 1 && y == 3 ? 1u : 0u;
  });
  CHECK_FALSE(find_large_homogeneous(checker, "3"_ord, WitnessKind::Homogeneous));
  CHECK_FALSE(find_large_homogeneous(checker, "3"_ord, WitnessKind::Fallow));
  CHECK(find_large_homogeneous(checker, "2"_ord, WitnessKind::Fallow));
  CHECK_THROWS_AS(find_large_homogeneous(checker, "3"_ord, WitnessKind::Homogeneous, true), Error);

  Coloring f = Coloring::from_code(FinSet::interval(1, 6), 2, 2, std::uint64_t{0});
  for (std::uint64_t code = 0; code < (1u << 15); code += 97) {
    f.set_code(code);
    CHECK(find_large_homogeneous(f, "3"_ord, WitnessKind::Homogeneous));
  }
}

TEST_CASE("statement examples", "[ramsey]") {
  const Statement rt2{StatementKind::RT2, 2};
  const auto five = is_stmt_alpha_large(FinSet::interval(1, 5), rt2, "3"_ord);
  CHECK_FALSE(five.holds);
  REQUIRE(five.counterexample);
  CHECK(triangle_free(Coloring::from_code(FinSet::interval(1, 5), 2, 2, *five.counterexample)));
  const auto six = is_stmt_alpha_large(FinSet::interval(1, 6), rt2, "3"_ord);
  CHECK(six.holds);
  CHECK(six.colorings_checked == (1u << 15));
  CHECK_THROWS_AS(is_stmt_alpha_large(FinSet::interval(1, 8), rt2, "3"_ord, {.budget = 1000}), Error);
}

TEST_CASE("RT1 at finite sizes", "[ramsey]") {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned a = 1; a <= 3; ++a)
      for (unsigned n = 1; n <= 9; ++n) {
        if (std::pow(double(k), double(n)) > 20000) continue;
        const auto r = is_stmt_alpha_large(FinSet::interval(1, n), Statement{StatementKind::RT1, k}, Ordinal::finite(a));
        // Pigeonhole: a class of size a exists iff n > k (a - 1).
        CHECK(r.holds == (n > k * (a - 1)));
        if (n >= k * a) CHECK(r.holds);
      }
}

TEST_CASE("workers and resume do not change the verdict", "[ramsey]") {
  const Statement rt2{StatementKind::RT2, 2};
  for (unsigned n : {5u, 6u}) {
    const FinSet x = FinSet::interval(1, n);
    const auto one = is_stmt_alpha_large(x, rt2, "3"_ord);
    const auto three = is_stmt_alpha_large(x, rt2, "3"_ord, {.workers = 3});
    CHECK(one.holds == three.holds);
    CHECK(one.counterexample == three.counterexample);
  }
  const auto from_zero = is_stmt_alpha_large(FinSet::interval(1, 5), rt2, "3"_ord);
  REQUIRE(from_zero.counterexample);
  const auto resumed = is_stmt_alpha_large(FinSet::interval(1, 5), rt2, "3"_ord, {.resume_from = *from_zero.counterexample});
  CHECK(resumed.counterexample == from_zero.counterexample);
  const auto past = is_stmt_alpha_large(FinSet::interval(1, 5), rt2, "3"_ord, {.resume_from = *from_zero.counterexample + 1});
  CHECK(past.counterexample > from_zero.counterexample);
}

TEST_CASE("statements are antitone in a and monotone in the carrier", "[ramsey]") {
  // Among finite a the requirement grows with a; w is not comparable that way
  // (on {1..n} it asks for two points), so it is only checked for carriers.
  const std::vector<Ordinal> as{"1"_ord, "2"_ord, "3"_ord, "4"_ord};
  for (auto kind : {StatementKind::RT2, StatementKind::FEM, StatementKind::TRRT2})
    for (unsigned n = 1; n <= 6; ++n) {
      const Statement s{kind, 2};
      std::optional<bool> previous;
      for (const auto& a : as) {
        const bool holds = is_stmt_alpha_large(FinSet::interval(1, n), s, a).holds;
        if (previous && !*previous) CHECK_FALSE(holds);
        previous = holds;
        if (holds && n < 6) CHECK(is_stmt_alpha_large(FinSet::interval(1, n + 1), s, a).holds);
      }
      if (n < 6 && is_stmt_alpha_large(FinSet::interval(2, n + 1), s, "w"_ord).holds)
        CHECK(is_stmt_alpha_large(FinSet::interval(2, n + 2), s, "w"_ord).holds);
    }
}

TEST_CASE("pigeonhole classes and leftmost homogeneous sets", "[ramsey]") {
  const FinSet x = FinSet::interval(1, 9);
  const auto cls = rt1_pigeonhole<unsigned>(x, [](const Nat& v) { return static_cast<unsigned>(v % 3); }, "3"_ord);
  REQUIRE(cls);
  CHECK(cls->key == 2u);
  CHECK(cls->members == FinSet{2, 5, 8});
  CHECK_FALSE(rt1_pigeonhole<unsigned>(x, [](const Nat& v) { return static_cast<unsigned>(v % 3); }, "4"_ord));

  const Coloring lower = Coloring::pairs(FinSet::interval(1, 6), 2, [](const Nat& a, const Nat&) {
    return a <= 2 ? 1u : 0u;
  });
  const auto h = leftmost_homogeneous(lower, lower.carrier(), 4);
  REQUIRE(h);
  CHECK(h->first == FinSet{3, 4, 5, 6});
  CHECK(h->second == 0u);
  CHECK(largest_homogeneous(lower, lower.carrier()) == FinSet{3, 4, 5, 6});
}
