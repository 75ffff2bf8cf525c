#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "largeness/micro.hpp"
#include "largeness/ordinal_io.hpp"

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

Coloring constant(const FinSet& carrier, Coloring::Color k) {
  return Coloring::pairs(carrier, k, [](const Nat&, const Nat&) { return 0u; });
}

// Micro deps that log every call.
struct Spy {
  std::vector<std::string> calls;

  PipelineDeps deps() {
    PipelineDeps base = micro_deps();
    PipelineDeps d = base;
    d.sparse_subset = [this, base](const FinSet& xs, unsigned m, unsigned l) {
      calls.push_back("sparse " + std::to_string(m) + " " + std::to_string(l));
      return base.sparse_subset(xs, m, l);
    };
    d.fallow = [this, base](const FinSet& ys, const Coloring& f, unsigned n) {
      calls.push_back("fallow " + std::to_string(n));
      return base.fallow(ys, f, n);
    };
    d.fallow_plus_one = [this, base](const FinSet& ys, const Coloring& f, unsigned n) {
      calls.push_back("fallow+1 " + std::to_string(n));
      return base.fallow_plus_one(ys, f, n);
    };
    d.transitive_homogeneous = [this, base](const FinSet& ys, const Coloring& f, unsigned n, unsigned k) {
      calls.push_back("homogeneous " + std::to_string(n) + " " + std::to_string(k) + " from " + ys.min().str());
      return base.transitive_homogeneous(ys, f, n, k);
    };
    return d;
  }
};

FinSet run_of(unsigned lo, std::size_t count) { return FinSet::interval(lo, lo + count - 1); }

}  // namespace

TEST_CASE("micro measure", "[pipelines]") {
  CHECK(micro_measure(Ordinal()) == 0);
  CHECK(micro_measure("w^3"_ord) == 8);
  CHECK(micro_measure("w^2*3+w+1"_ord) == 15);
  CHECK(code_of([] { micro_measure("w^w"_ord); }) == ErrorCode::Unsupported);
}

TEST_CASE("gates enforce the min thresholds exactly", "[pipelines]") {
  const auto micro = micro_deps();
  const Coloring f = constant(FinSet::interval(1, 200), 2);
  // fEM, n = 1: w^4 needs 16 points.
  CHECK_NOTHROW(em_pipeline(run_of(7, 16), f, 1, micro));
  CHECK(code_of([&] { em_pipeline(run_of(6, 16), f, 1, micro); }) == ErrorCode::MinTooSmall);
  CHECK(code_of([&] { em_pipeline(run_of(7, 15), f, 1, micro); }) == ErrorCode::NotLargeEnough);
  // trRT, n = k = 1: w^4.
  CHECK_NOTHROW(trrt_pipeline(run_of(8, 16), f, 1, 1, micro));
  CHECK(code_of([&] { trrt_pipeline(run_of(7, 16), f, 1, 1, micro); }) == ErrorCode::MinTooSmall);
  // ADS, n = 1: w^5.
  CHECK_NOTHROW(ads_pipeline(run_of(9, 32), f, 1, micro));
  CHECK(code_of([&] { ads_pipeline(run_of(8, 32), f, 1, micro); }) == ErrorCode::MinTooSmall);
  CHECK(code_of([&] { ads_pipeline(run_of(9, 31), f, 1, micro); }) == ErrorCode::NotLargeEnough);
  // RT2, n = 1, k = 2: w^5.
  CHECK_NOTHROW(rt2_pipeline(run_of(17, 32), f, 1, 2, micro));
  CHECK(code_of([&] { rt2_pipeline(run_of(16, 32), f, 1, 2, micro); }) == ErrorCode::MinTooSmall);
  CHECK(code_of([&] { rt2_pipeline(run_of(17, 31), f, 1, 2, micro); }) == ErrorCode::NotLargeEnough);
  CHECK(code_of([&] { rt2_pipeline(run_of(17, 32), f, 0, 2, micro); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("pipelines chain their steps with the stated parameters", "[pipelines]") {
  const Coloring f = constant(FinSet::interval(1, 300), 2);
  {
    Spy spy;
    em_pipeline(run_of(7, 32), f, 2, spy.deps());
    CHECK(spy.calls == std::vector<std::string>{"sparse 2 1", "fallow 2"});
  }
  {
    Spy spy;
    // Sparse prefix of mu(w^2*2+1) = 9 points from 8; Y_1 starts after the first 4.
    trrt_pipeline(run_of(8, 32), f, 1, 2, spy.deps());
    CHECK(spy.calls == std::vector<std::string>{"sparse 2 2", "homogeneous 1 2 from 12"});
  }
  {
    Spy spy;
    ads_pipeline(run_of(9, 32), constant(FinSet::interval(1, 300), 2), 1, spy.deps());
    CHECK(spy.calls == std::vector<std::string>{"sparse 2 2", "homogeneous 1 2 from 13"});
  }
  {
    Spy spy;
    // Sparse prefix of mu(w^2*5+1) = 21 points from 17; X_1 starts after the first 4.
    rt2_pipeline(run_of(17, 32), f, 1, 2, spy.deps());
    CHECK(spy.calls == std::vector<std::string>{"sparse 2 5", "fallow+1 2", "homogeneous 1 2 from 21"});
  }
}

TEST_CASE("pipelines certify what their steps return", "[pipelines]") {
  const Coloring f = Coloring::pairs(FinSet::interval(1, 100), 2, [](const Nat& x, const Nat& y) {
    return (x + y) % 2 == 0 ? 0u : 1u;
  });
  PipelineDeps lying = micro_deps();
  lying.fallow = [](const FinSet& ys, const Coloring&, unsigned) { return ys.prefix(3); };
  // {7,8,9}: f(7,9) = 0 but f(7,8) = f(8,9) = 1.
  CHECK(code_of([&] { em_pipeline(run_of(7, 16), f, 1, lying); }) == ErrorCode::CertificationFailed);
  lying.fallow = [](const FinSet&, const Coloring&, unsigned) { return FinSet{1, 2}; };
  CHECK(code_of([&] { em_pipeline(run_of(7, 16), f, 1, lying); }) == ErrorCode::CertificationFailed);
}

TEST_CASE("transitivity is required where stated", "[pipelines]") {
  const Coloring bad = Coloring::pairs(FinSet::interval(1, 100), 2, [](const Nat& x, const Nat& y) {
    return (x + y) % 2 == 0 ? 1u : 0u;
  });
  CHECK(code_of([&] { trrt_pipeline(run_of(8, 16), bad, 1, 1, micro_deps()); }) == ErrorCode::NotTransitive);
  CHECK(code_of([&] { ads_pipeline(run_of(9, 32), bad, 1, micro_deps()); }) == ErrorCode::NotTransitive);
}

TEST_CASE("real instances are out of reach", "[pipelines]") {
  CHECK(code_of([] { real_instance(7, "w^4"_ord); }) == ErrorCode::InfeasibleScale);
  CHECK(code_of([] { real_instance(8, "w^4"_ord); }) == ErrorCode::InfeasibleScale);
  CHECK(code_of([] { real_instance(9, "w^5"_ord); }) == ErrorCode::InfeasibleScale);
  CHECK(code_of([] { real_instance(17, "w^5"_ord); }) == ErrorCode::InfeasibleScale);
  const FinSet x = FinSet::interval(17, 400);
  const Coloring f = constant(x, 2);
  CHECK(code_of([&] { rt2_pipeline(x, f, 1, 2); }) == ErrorCode::NotLargeEnough);
  CHECK(code_of([&] { em_pipeline(x, f, 1); }) == ErrorCode::NotLargeEnough);
}
