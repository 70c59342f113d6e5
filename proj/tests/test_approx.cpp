#include <doctest.h>

#include <cmath>

#include "sbb/approx.hpp"
#include "sbb/error.hpp"
#include "sbb/exact.hpp"
#include "sbb/ingest.hpp"

using namespace sbb;

TEST_CASE("sparsify") {
  const auto g = generate_random_bipartite({100, 100, 1.0, 0.5, 1});
  REQUIRE(g.edge_count() == 10'000);
  CHECK(sparsify(g, 1.0, 3) == g);

  const auto half = sparsify(g, 0.5, 3);
  CHECK(half.edge_count() >= 4500);
  CHECK(half.edge_count() <= 5500);
  CHECK(half.left_count() == 100);
  CHECK(half.right_count() == 100);
  CHECK(sparsify(g, 0.5, 3) == half);
  for (const auto& e : half.edges()) {
    CHECK(g.edge_sign(e.left, static_cast<VertexId>(100 + e.right)) == e.sign);
  }

  // Mean retained edges tracks rho * |E| for small rho.
  double kept = 0;
  for (std::uint64_t s = 0; s < 50; ++s) kept += static_cast<double>(sparsify(g, 0.01, s).edge_count());
  CHECK(kept / 50 == doctest::Approx(100.0).epsilon(0.1));

  for (double bad : {0.0, -0.1, 1.5, std::nan("")}) {
    CHECK_THROWS_AS(sparsify(g, bad, 0), Error);
  }
}

TEST_CASE("estimate_balanced basics") {
  const auto g = generate_random_bipartite({20, 20, 0.5, 0.5, 8});
  const auto exact = static_cast<double>(bb_bucket(g).balanced);
  const auto r = estimate_balanced(g, 1.0, 5, 99);
  CHECK(r.estimates.size() == 5);
  for (double x : r.estimates) CHECK(x == exact);
  CHECK(r.mean == exact);
  CHECK(r.sample_stddev == 0.0);

  const auto empty = estimate_balanced(build_graph(3, 3, {}), 0.4, 10, 1);
  for (double x : empty.estimates) CHECK(x == 0.0);

  try {
    estimate_balanced(g, 1.5, 1, 0);
    FAIL("expected InvalidRho");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidRho);
  }
  try {
    estimate_balanced(g, 0.5, 0, 0);
    FAIL("expected InvalidTrials");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidTrials);
  }
}

TEST_CASE("estimator statistics") {
  // Exact balanced count 7070, frozen with tests/oracle/freeze_fixtures.py.
  const auto g = generate_random_bipartite({30, 30, 0.5, 0.5, 3});
  REQUIRE(bb_bucket(g).balanced == 7070);
  const double exact = 7070.0;

  const auto r = estimate_balanced(g, 0.5, 400, 2024);
  CHECK(std::abs(r.mean - exact) <= 0.1 * exact);

  double mean = 0;
  for (double x : r.estimates) mean += x;
  mean /= 400;
  double ss = 0;
  for (double x : r.estimates) ss += (x - mean) * (x - mean);
  CHECK(r.mean == doctest::Approx(mean));
  CHECK(r.sample_stddev == doctest::Approx(std::sqrt(ss / 399)));

  std::vector<double> sd;
  for (double rho : {0.3, 0.5, 0.7}) {
    const auto e = estimate_balanced(g, rho, 400, 7);
    CHECK(std::abs(e.mean - exact) <= 3 * e.sample_stddev / std::sqrt(400.0));
    sd.push_back(e.sample_stddev);
  }
  CHECK(sd[0] >= sd[2]);
  CHECK(estimate_balanced(g, 0.5, 3, 11).estimates == estimate_balanced(g, 0.5, 3, 11).estimates);
}
