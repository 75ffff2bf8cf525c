#include <catch_amalgamated.hpp>

#include "largeness/ordinal_io.hpp"
#include "largeness/partition.hpp"

using namespace largeness;
using namespace largeness::literals;

namespace {

template <class F>
ErrorCode code_of(F&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Unsupported;
}

}  // namespace

TEST_CASE("union bound examples", "[partition]") {
  CHECK(check_union_bound(FinSet{}, FinSet{}, Ordinal(), Ordinal()));
  CHECK(check_union_bound(FinSet{4}, FinSet{6}, "1"_ord, "1"_ord));
  CHECK(check_union_bound(FinSet{3, 5, 6, 7}, FinSet{9, 10, 11}, "w"_ord, "3"_ord));
  CHECK(code_of([] { check_union_bound(FinSet{3, 5, 6, 7, 8}, FinSet{}, "w"_ord, Ordinal()); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("split examples", "[partition]") {
  CHECK(split(FinSet{2, 3}, "1"_ord, "1"_ord) == SplitWitness{FinSet{2}, FinSet{3}});
  // {w*2}(3) = w+3, then 2, 1, 0 reach w at 6; seven more points finish.
  CHECK(split(FinSet::interval(3, 14), "w"_ord, "w"_ord) ==
        SplitWitness{FinSet{3, 4, 5, 6}, FinSet::interval(7, 14)});
  CHECK(code_of([] { split(FinSet::interval(3, 10), "w"_ord, "w"_ord); }) == ErrorCode::NotLargeEnough);
  CHECK(code_of([] { split(FinSet{2, 3}, "w"_ord, "1"_ord); }) == ErrorCode::NotLargeEnough);
}

TEST_CASE("split of w*2-large intervals", "[partition]") {
  std::size_t hits = 0;
  for (unsigned x = 1; x <= 6; ++x)
    for (unsigned y = x; y <= 40; ++y) {
      const FinSet i = FinSet::interval(x, y);
      if (!is_large(i, "w*2"_ord)) continue;
      ++hits;
      const auto w = split(i, "w"_ord, "w"_ord);
      CHECK(is_exactly_large(w.left, "w"_ord));
      CHECK(is_large(w.right, "w"_ord));
    }
  CHECK(hits > 100);
}

TEST_CASE("pigeonhole examples", "[partition]") {
  const auto v = pigeonhole_v1(FinSet{2, 3}, FinSet{4, 5}, "1"_ord, "1"_ord);
  CHECK(v == PigeonholeVerdict::LeftLarge);
  CHECK(pigeonhole_v1(FinSet{2}, FinSet{4}, "1"_ord, "1"_ord) == PigeonholeVerdict::BothExact);
  // With X1 empty only b = 0 can work, and then X0 carries everything.
  CHECK(pigeonhole_v1(FinSet{2, 3}, FinSet{}, "1"_ord, Ordinal()) == PigeonholeVerdict::LeftLarge);
  CHECK(pigeonhole_v1(FinSet{2}, FinSet{}, "1"_ord, Ordinal()) == PigeonholeVerdict::BothExact);
  CHECK(code_of([] { pigeonhole_v1(FinSet{2}, FinSet{}, "1"_ord, "1"_ord); }) == ErrorCode::NotLargeEnough);

  CHECK(pigeonhole_v2(FinSet{2}, FinSet{}, 3, "1"_ord, "1"_ord) == PigeonholeVerdict::LeftLarge);
  CHECK(pigeonhole_v2(FinSet{}, FinSet{2}, 3, "1"_ord, "1"_ord) == PigeonholeVerdict::RightLarge);
  CHECK(code_of([] { pigeonhole_v2(FinSet{2}, FinSet{5}, 5, "1"_ord, "1"_ord); }) == ErrorCode::BadStar);
  CHECK(code_of([] { pigeonhole_v2(FinSet{}, FinSet{}, 5, "1"_ord, "1"_ord); }) == ErrorCode::NotLargeEnough);
}

TEST_CASE("construct", "[partition]") {
  CHECK(construct(BlockSequence({FinSet{4}}), 0, 0) == FinSet{4});
  // Singleton blocks whose maxima {3,4,5,6} are w-large.
  CHECK(construct(BlockSequence({FinSet{3}, FinSet{4}, FinSet{5}, FinSet{6}}), 0, 1) == FinSet{3, 4, 5, 6});
  // w-large blocks whose maxima form a w-large set.
  std::vector<FinSet> blocks;
  Nat start = 2;
  for (int i = 0; i < 5; ++i) {
    blocks.push_back(minimal_large_suffix(start, "w"_ord));
    start = blocks.back().max() + 1;
  }
  const BlockSequence seq(blocks);
  REQUIRE(blocks_large(seq, "w"_ord));
  CHECK(is_large(construct(seq, 1, 1), "w^2"_ord));
  CHECK(code_of([] { construct(BlockSequence({FinSet{3}, FinSet{4}}), 0, 1); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("deconstruct", "[partition]") {
  const auto base = deconstruct(FinSet{4, 9}, 0, 0);
  CHECK(base.size() == 2);

  const FinSet x = minimal_large_suffix(2, "w+1"_ord);
  const auto b = deconstruct(x, 0, 1);
  CHECK(is_large(b.maxima().without_max(), "w"_ord));

  const FinSet y = minimal_large_suffix(3, "w^2+w"_ord);
  const auto c = deconstruct(y, 1, 1);
  for (const auto& blk : c.blocks()) CHECK(is_large(blk, "w"_ord));
  CHECK(is_large(c.maxima().without_max(), "w"_ord));
  // Fed back to construct, the first d blocks give a w^2-large set.
  std::vector<FinSet> first(c.blocks().begin(), c.blocks().end() - 1);
  CHECK(is_large(construct(BlockSequence(first), 1, 1), "w^2"_ord));

  CHECK(code_of([] { deconstruct(FinSet{3, 4, 5}, 1, 1); }) == ErrorCode::NotLargeEnough);
}

TEST_CASE("deconstruct_general", "[partition]") {
  const FinSet x = minimal_large_suffix(4, "w*3"_ord);
  const auto m0 = deconstruct_general(x, 1, 0, 1, 2);
  CHECK(m0.size() == 2);
  for (const auto& blk : m0.blocks()) CHECK(is_large(blk, "w"_ord));
  CHECK(blocks_large(m0, "2"_ord));

  const FinSet y = minimal_large_suffix(2, "w^2*2"_ord);
  const auto m1 = deconstruct_general(y, 1, 1, 1, 1);
  for (const auto& blk : m1.blocks()) CHECK(is_large(blk, "w"_ord));
  CHECK(blocks_large(m1, "w"_ord));

  CHECK(code_of([] { deconstruct_general(FinSet::interval(3, 200), 1, 0, 2, 1); }) == ErrorCode::MinTooSmall);
}

TEST_CASE("sparse large subset", "[partition]") {
  CHECK(code_of([] { sparse_large_subset(FinSet::interval(4, 10), 0, 1); }) == ErrorCode::MinTooSmall);
  CHECK(code_of([] { sparse_large_subset(FinSet::interval(5, 10), 0, 1); }) == ErrorCode::NotLargeEnough);
  // The least w^3-large interval from 5 is far beyond the element budget.
  CHECK(code_of([] { minimal_large_suffix(5, "w^3"_ord); }) == ErrorCode::InfeasibleScale);
}
