// A short tour of the library: ordinals, fundamental sequences, largeness,
// the Hardy-style hierarchy, splitting, and a brute-force Ramsey check.

#include <iostream>

#include "largeness/hardy.hpp"
#include "largeness/largeness.hpp"
#include "largeness/ordinal_io.hpp"
#include "largeness/partition.hpp"
#include "largeness/ramsey.hpp"

using namespace largeness;
using namespace largeness::literals;

int main() {
  const Ordinal a = "w^2*2+w+3"_ord;
  std::cout << "a = " << a << ", pseudo-norm " << pseudo_norm(a) << '\n';
  std::cout << "natural sum with w*2+1: " << natural_sum(a, "w*2+1"_ord) << '\n';

  // Walking down: each step replaces a by {a}(x) for the next point x.
  Ordinal b = "w^2"_ord;
  for (int x : {3, 4, 5}) {
    const Ordinal next = fundamental_step(b, x);
    std::cout << "{" << b << "}(" << x << ") = " << next << '\n';
    b = next;
  }

  const FinSet xs{3, 5, 6, 7, 8};
  std::cout << xs << " is w-large: " << std::boolalpha << is_large(xs, "w"_ord)
            << ", exactly: " << is_exactly_large(xs, "w"_ord) << '\n';

  for (const auto& [ord, point] : hardy_trace(HardyFrame(xs), "w"_ord, 3))
    std::cout << "  at " << point << " still to go: " << ord << '\n';

  // Least w^2-large set starting at 2.
  const FinSet block = minimal_large_suffix(2, "w^2"_ord);
  std::cout << "least w^2-large interval from 2: " << block << '\n';

  const auto parts = split(FinSet::interval(3, 14), "w"_ord, "w"_ord);
  std::cout << "split of [3,14] for w (+) w: " << parts.left << " and " << parts.right << '\n';

  // Every 2-coloring of pairs from {1..6} has a 3-point homogeneous set; {1..5} does not suffice.
  const Statement rt2{StatementKind::RT2, 2};
  for (int top : {5, 6}) {
    const auto r = is_stmt_alpha_large(FinSet::interval(1, top), rt2, "3"_ord);
    std::cout << "[1," << top << "] is RT2_2-3-large: " << r.holds << " after " << r.colorings_checked
              << " colorings\n";
  }
}
