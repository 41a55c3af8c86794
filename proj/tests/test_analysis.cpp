#include <doctest.h>

#include <cmath>

#include "admm_topo/analysis.hpp"
#include "admm_topo/errors.hpp"
#include "admm_topo/graph.hpp"
#include "support.hpp"

using namespace admm_topo;
using namespace test_support;

TEST_CASE("speedup certificate for the 6-cycle") {
  SpeedupCertificate c = speedup_certificate(cycle_graph(6));
  CHECK(c.regime == TuningRegime::EvenCycleLowConductance);
  CHECK_FALSE(c.upper_bound_only);
  CHECK(c.delta == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(c.delta_ratio == doctest::Approx(1.0));
  CHECK(c.tau_a_star == doctest::Approx(2.0 * std::sqrt(3.0) - 3.0));
  CHECK(c.tau_g_star == doctest::Approx(0.6));
  CHECK(c.lhs == doctest::Approx(0.2871871).epsilon(1e-6));
  CHECK(c.rhs_upper == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(c.ratio == doctest::Approx(0.7179677).epsilon(1e-6));
  CHECK(c.sandwich_holds);
  CHECK(c.conjecture_holds_numerically);
  // delta = 1/2 puts the gap-dependent constant at its floor
  CHECK(c.reported_C == doctest::Approx(0.0));
}

TEST_CASE("larger even cycles close more of the sandwich gap") {
  SpeedupCertificate c6 = speedup_certificate(cycle_graph(6));
  SpeedupCertificate c8 = speedup_certificate(cycle_graph(8));
  CHECK(c8.ratio == doctest::Approx(0.8035222).epsilon(1e-6));
  CHECK(c8.ratio > c6.ratio);
}

TEST_CASE("certificates on fallback topologies are flagged") {
  SpeedupCertificate p3 = speedup_certificate(path_graph(3));
  CHECK(p3.upper_bound_only);
  CHECK(p3.regime == TuningRegime::Unsupported);
  CHECK(p3.tau_a_star == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("sandwich and conjecture hold across the covered corpus") {
  std::vector<Graph> graphs = {cycle_graph(4), cycle_graph(6), cycle_graph(8),
                               house_graph(), complete_graph(4),
                               complete_graph(5)};
  for (const Graph& g : random_graph_corpus(10, 4, 9, 4100))
    graphs.push_back(g);
  for (const Graph& g : graphs) {
    SpeedupCertificate c = speedup_certificate(g);
    if (c.upper_bound_only) continue;  // no exact tau_a to certify
    CAPTURE(g.n_vertices);
    CAPTURE(g.n_edges());
    CHECK(c.sandwich_holds);
    CHECK(c.conjecture_holds_numerically);
  }
}

TEST_CASE("cycle family sweep matches its closed form") {
  std::vector<CycleFamilyRow> rows = cycle_family_sweep({8, 16, 32, 64, 128});
  REQUIRE(rows.size() == 5u);

  const double expected_ratio[] = {0.803522, 1.104585, 1.422982, 1.666157,
                                   1.819373};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(std::abs(rows[i].ratio - expected_ratio[i]) <= 5e-6);
    CHECK(rows[i].bound_ok);
    CHECK(rows[i].delta ==
          doctest::Approx(1.0 - std::cos(2.0 * M_PI / rows[i].n)));
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].ratio > rows[i - 1].ratio);

  // the family crosses 1.9 between 128 and 256 vertices
  CHECK(cycle_family_sweep({256})[0].ratio ==
        doctest::Approx(1.905894).epsilon(1e-5));

  CHECK_THROWS_AS(cycle_family_sweep({7}), ParameterOutOfRange);
  CHECK_THROWS_AS(cycle_family_sweep({2}), ParameterOutOfRange);
}

TEST_CASE("laplacian bounds hold with nonnegative slack") {
  std::vector<Graph> graphs = {cycle_graph(6), house_graph(), star_graph(5),
                               complete_graph(4), path_graph(5)};
  for (const Graph& g : random_graph_corpus(6, 4, 9, 4300))
    graphs.push_back(g);

  for (const Graph& g : graphs) {
    SpectralReport report = walk_spectrum(g);
    std::vector<BoundCheck> checks = laplacian_bound_check(report, g);
    CHECK(checks.size() == 6u);
    for (const BoundCheck& b : checks) {
      CAPTURE(b.name);
      CHECK(b.holds);
      CHECK(b.slack >= -1e-9);
    }
  }

  // bipartite graphs meet the largest-eigenvalue bound with equality
  std::vector<BoundCheck> c6 =
      laplacian_bound_check(walk_spectrum(cycle_graph(6)), cycle_graph(6));
  for (const BoundCheck& b : c6)
    if (b.name == "largest laplacian eigenvalue <= 2 d_max")
      CHECK(std::abs(b.slack) <= 1e-9);
}

TEST_CASE("cheeger bounds hold with nonnegative slack") {
  std::vector<Graph> graphs = {cycle_graph(6), house_graph(), star_graph(5),
                               complete_graph(4), path_graph(5)};
  for (const Graph& g : random_graph_corpus(6, 4, 9, 4500))
    graphs.push_back(g);

  for (const Graph& g : graphs) {
    TopologyClass topo = classify(g);
    SpectralReport report = walk_spectrum(g);
    std::vector<BoundCheck> checks = cheeger_check(topo, report);
    CHECK(checks.size() == 2u);
    for (const BoundCheck& b : checks) {
      CAPTURE(b.name);
      CHECK(b.holds);
      CHECK(b.slack >= -1e-9);
    }
  }

  // hand numbers for the 6-cycle: 1 - 2 phi = 1/3 <= 1/2 and
  // 1/2 <= 1 - phi^2/2 = 17/18
  std::vector<BoundCheck> c6 =
      cheeger_check(classify(cycle_graph(6)), walk_spectrum(cycle_graph(6)));
  CHECK(c6[0].slack == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
  CHECK(c6[1].slack == doctest::Approx(1.0 - 1.0 / 18.0 - 0.5).epsilon(1e-9));
}
