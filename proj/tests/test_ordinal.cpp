#include <catch_amalgamated.hpp>

#include <array>
#include <map>

#include "largeness/ordinal.hpp"
#include "largeness/ordinal_io.hpp"
#include "largeness/universe.hpp"

using namespace largeness;
using namespace largeness::literals;

namespace {

// Ordinals below w^3 with coefficients <= 3, as digit triples (w^2, w, 1).
using Digits = std::array<int, 3>;

Ordinal from_digits(const Digits& d) {
  std::vector<Term> terms;
  for (int i = 0; i < 3; ++i)
    if (d[i] > 0) terms.push_back(Term{Ordinal::finite(2 - i), Nat(d[i])});
  return Ordinal::from_cnf(std::move(terms));
}

std::vector<Digits> all_digits() {
  std::vector<Digits> out;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) out.push_back({a, b, c});
  return out;
}

// Order embedding into the integers: base-4 reading of the digits.
int rank(const Digits& d) { return d[0] * 16 + d[1] * 4 + d[2]; }

// Ordinary sum on digit triples: a's digits below b's leading digit are absorbed.
std::array<int, 3> digits_sum(const Digits& a, const Digits& b) {
  int lead = 3;
  for (int i = 0; i < 3; ++i)
    if (b[i] > 0) {
      lead = i;
      break;
    }
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) {
    if (i < lead) out[i] = a[i];
    else if (i == lead) out[i] = a[i] + b[i];
    else out[i] = b[i];
  }
  return out;
}

Ordinal from_wide_digits(const std::array<int, 3>& d) {
  std::vector<Term> terms;
  for (int i = 0; i < 3; ++i)
    if (d[i] > 0) terms.push_back(Term{Ordinal::finite(2 - i), Nat(d[i])});
  return Ordinal::from_cnf(std::move(terms));
}

}  // namespace

TEST_CASE("compare examples", "[ordinal]") {
  CHECK((Ordinal() <=> Ordinal()) == 0);
  CHECK("w"_ord > "10"_ord);
  CHECK("w^2*2+3"_ord < "w^2*2+w"_ord);
}

TEST_CASE("compare agrees with the base-4 order embedding below w^3", "[ordinal]") {
  const auto digits = all_digits();
  for (const auto& a : digits)
    for (const auto& b : digits) {
      const auto expected = rank(a) <=> rank(b);
      REQUIRE((from_digits(a) <=> from_digits(b)) == expected);
      REQUIRE((from_digits(a) == from_digits(b)) == (rank(a) == rank(b)));
    }
}

TEST_CASE("sums agree with digit arithmetic below w^3", "[ordinal]") {
  const auto digits = all_digits();
  for (const auto& a : digits)
    for (const auto& b : digits) {
      std::array<int, 3> nat{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
      REQUIRE(natural_sum(from_digits(a), from_digits(b)) == from_wide_digits(nat));
      REQUIRE(ordinary_sum(from_digits(a), from_digits(b)) == from_wide_digits(digits_sum(a, b)));
    }
}

TEST_CASE("ordinary sum examples", "[ordinal]") {
  CHECK(ordinary_sum("1"_ord, "w"_ord) == "w"_ord);
  CHECK(ordinary_sum("w"_ord, "1"_ord) == "w+1"_ord);
  CHECK(ordinary_sum("w*2+3"_ord, "w"_ord) == "w*3"_ord);
}

TEST_CASE("natural sum examples", "[ordinal]") {
  CHECK(natural_sum("w+1"_ord, "w*2"_ord) == "w*3+1"_ord);
  CHECK(natural_sum(Ordinal(), "w^w+4"_ord) == "w^w+4"_ord);
  CHECK(natural_sum("w^2"_ord, "w"_ord) == "w^2+w"_ord);
}

TEST_CASE("much greater examples", "[ordinal]") {
  CHECK(much_greater("w^2"_ord, "w*3"_ord));
  CHECK_FALSE(much_greater("w*3"_ord, "w^2"_ord));
  CHECK(much_greater(Ordinal(), "w"_ord));
  CHECK(much_greater("w"_ord, Ordinal()));
}

TEST_CASE("pseudo norm examples", "[ordinal]") {
  CHECK(pseudo_norm(Ordinal()) == 0);
  CHECK(pseudo_norm("w^(w*2)*3+5"_ord) == 5);
  CHECK(pseudo_norm("w^(w^7)"_ord) == 7);
}

TEST_CASE("short normal form examples", "[ordinal]") {
  CHECK(short_cnf("w*3+2"_ord) == ShortCNF{"w*3+1"_ord, Ordinal()});
  CHECK(short_cnf("w^2"_ord) == ShortCNF{Ordinal(), "2"_ord});
  CHECK(short_cnf("w^w*2+w"_ord) == ShortCNF{"w^w*2"_ord, "1"_ord});
  CHECK_THROWS_MATCHES(short_cnf(Ordinal()), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::ZeroOrdinal;
                       }));
}

TEST_CASE("split for natural sum examples", "[ordinal]") {
  CHECK(split_for_natural_sum(Ordinal(), "w"_ord) == std::pair{Ordinal(), "w"_ord});
  CHECK(split_for_natural_sum("w^2"_ord, "w+1"_ord) == std::pair{"w^2"_ord, "w+1"_ord});
  // The lowest exponent of b is 0, so everything lands in b'.
  CHECK(split_for_natural_sum("w+1"_ord, "w"_ord) == std::pair{"w*2+1"_ord, Ordinal()});
}

TEST_CASE("properties over the small universe", "[ordinal]") {
  const auto universe = small_universe();
  REQUIRE(universe.size() == 1156);
  for (std::size_t i = 1; i < universe.size(); ++i) REQUIRE(universe[i - 1] < universe[i]);

  for (const auto& a : universe) {
    // canonical term lists
    const auto& t = a.terms();
    for (std::size_t i = 0; i < t.size(); ++i) {
      REQUIRE(t[i].coefficient >= 1);
      if (i) REQUIRE(t[i - 1].exponent > t[i].exponent);
    }
    if (!a.is_zero()) {
      auto s = short_cnf(a);
      REQUIRE(s.recompose() == a);
      REQUIRE(much_greater(s.head, Ordinal::omega_power(s.tail_exponent)));
    }
    REQUIRE(parse_ordinal(to_string(a)) == a);
  }

  for (const auto& a : universe)
    for (const auto& b : universe) {
      const Ordinal n = natural_sum(a, b);
      REQUIRE(n == natural_sum(b, a));
      if (much_greater(b, a)) REQUIRE(ordinary_sum(b, a) == n);
      REQUIRE(walk_weight(n) == walk_weight(a) + walk_weight(b));
      auto [b2, a2] = split_for_natural_sum(b, a);
      REQUIRE(much_greater(b2, a2));
      REQUIRE(ordinary_sum(b2, a2) == n);
    }
}

TEST_CASE("natural sum is associative on a restricted universe", "[ordinal]") {
  // Exponents {0, 1, w}, coefficients <= 4: every psn is at most 4.
  const auto u = ordinal_universe({Ordinal(), "1"_ord, "w"_ord}, 4, 3);
  REQUIRE(u.size() == 125);
  for (const auto& a : u)
    for (const auto& b : u)
      for (const auto& c : u)
        REQUIRE(natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c)));
}

TEST_CASE("parser and formatter", "[ordinal][io]") {
  CHECK(to_string("w^(w*2)*3+5"_ord) == "w^(w*2)*3+5");
  CHECK(to_string(parse_ordinal(" w^2 + w + 1 ")) == "w^2+w+1");
  CHECK(to_string("w*3+1"_ord) == "w*3+1");
  CHECK(to_string("w^(w+1)"_ord) == "w^(w+1)");
  CHECK(to_string("w^w"_ord) == "w^w");
  CHECK(to_string("w^(w^w)*2"_ord) == "w^(w^w)*2");
  CHECK(parse_ordinal("w^(0)") == "1"_ord);
  CHECK(parse_ordinal("0") == Ordinal());
}

TEST_CASE("parser rejects non-canonical input with a position", "[ordinal][io]") {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_ordinal(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("accepted " << text);
    return 0;
  };
  CHECK(position_of("w+w^2") == 2);
  CHECK(position_of("3+2") == 2);
  CHECK(position_of("w+w") == 2);
  CHECK(position_of("w*0") == 2);
  CHECK(position_of("w^w^2") == 3);
  CHECK(position_of("w+0") == 2);
  CHECK(position_of("") == 0);
  CHECK(position_of("w^(w") == 4);
}
