#include <doctest.h>

#include <cmath>

#include "admm_topo/errors.hpp"
#include "admm_topo/graph.hpp"
#include "admm_topo/spectral.hpp"
#include "admm_topo/tuning.hpp"
#include "support.hpp"

using namespace admm_topo;

TEST_CASE("even-cycle tuning formula in closed form") {
  // omega* = 1/2 (the 6-cycle): rho* = sqrt(3), gamma* = 4/(1+sqrt(3)),
  // tau* = 2 sqrt(3) - 3
  TuningResult r = tune_admm_even_cycle(0.5);
  CHECK(r.rho_star == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(r.gamma_star ==
        doctest::Approx(4.0 / (1.0 + std::sqrt(3.0))).epsilon(1e-12));
  CHECK(r.tau_star == doctest::Approx(2.0 * std::sqrt(3.0) - 3.0).epsilon(1e-12));
  CHECK(r.tau_star == doctest::Approx(r.gamma_star - 1.0).epsilon(1e-12));
  CHECK(r.regime == TuningRegime::EvenCycleLowConductance);

  // published five-decimal reference point
  TuningResult ref = tune_admm_even_cycle(0.75047);
  CHECK(std::abs(ref.rho_star - 1.32181) <= 5e-6);
  CHECK(std::abs(ref.gamma_star - 1.56976) <= 5e-6);

  // omega* = 1/3 gives the square-root-of-two pair
  TuningResult third = tune_admm_even_cycle(1.0 / 3.0);
  CHECK(third.rho_star == doctest::Approx(4.0 * std::sqrt(2.0) / 3.0));
  CHECK(third.gamma_star == doctest::Approx(std::sqrt(2.0)));
  CHECK(third.tau_star == doctest::Approx(std::sqrt(2.0) - 1.0));
}

TEST_CASE("even-cycle tuning rejects omega* outside (0, 1)") {
  CHECK_THROWS_AS(tune_admm_even_cycle(0.0), OmegaOutOfRange);
  CHECK_THROWS_AS(tune_admm_even_cycle(1.0), OmegaOutOfRange);
  CHECK_THROWS_AS(tune_admm_even_cycle(-0.5), OmegaOutOfRange);
  CHECK_THROWS_AS(tune_admm_even_cycle(1.2), OmegaOutOfRange);
}

TEST_CASE("no-even-cycle tuning formula") {
  // reference pair used by the parameter table's last row
  const double omega_star = (std::sqrt(97.0) - 1.0) / 12.0;
  const double omega_bar = -(std::sqrt(97.0) + 1.0) / 12.0;
  TuningResult r = tune_admm_no_even_cycle(omega_star, omega_bar);
  CHECK(std::abs(r.rho_star - 1.351) <= 5e-4);
  CHECK(std::abs(r.gamma_star - 1.659) <= 5e-4);
  CHECK(std::abs(r.tau_star - 0.536) <= 5e-4);
  CHECK(r.regime == TuningRegime::NoEvenCycleLowConductance);

  CHECK_THROWS_AS(tune_admm_no_even_cycle(0.5, -0.3), HypothesisViolated);
  CHECK_THROWS_AS(tune_admm_no_even_cycle(0.5, 0.6), OmegaOutOfRange);
  CHECK_THROWS_AS(tune_admm_no_even_cycle(0.5, -1.2), OmegaOutOfRange);
  CHECK_THROWS_AS(tune_admm_no_even_cycle(0.0, -0.5), OmegaOutOfRange);
}

TEST_CASE("omega_bar = -1 reduces the general formula to the even-cycle one") {
  for (double omega_star : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    TuningResult a = tune_admm_no_even_cycle(omega_star, -1.0);
    TuningResult b = tune_admm_even_cycle(omega_star);
    CHECK(a.rho_star == doctest::Approx(b.rho_star).epsilon(1e-12));
    CHECK(a.gamma_star == doctest::Approx(b.gamma_star).epsilon(1e-12));
    CHECK(a.tau_star == doctest::Approx(b.tau_star).epsilon(1e-12));
  }
}

TEST_CASE("a gap in the lower spectrum only ever helps") {
  // the even-cycle rate is what the general formula yields at omega_bar = -1,
  // so it bounds every admissible omega_bar from above
  for (double omega_star : {0.3, 0.5, 0.7}) {
    double tau4 = tune_admm_even_cycle(omega_star).tau_star;
    for (double t = 0.0; t <= 1.0; t += 0.125) {
      double omega_bar = -omega_star - t * (1.0 - omega_star);
      double tau5 = tune_admm_no_even_cycle(omega_star, omega_bar).tau_star;
      CHECK(tau5 <= tau4 + 1e-12);
    }
  }
}

TEST_CASE("high-conductance constants") {
  TuningResult r = tune_admm_high_conductance_even_cycle();
  CHECK(r.rho_star == doctest::Approx(2.0));
  CHECK(r.gamma_star == doctest::Approx(4.0 / 3.0));
  CHECK(r.tau_star == doctest::Approx(1.0 / 3.0));
  CHECK(r.regime == TuningRegime::EvenCycleHighConductance);
}

TEST_CASE("gradient-descent tuning") {
  GdTuning c6 = tune_gd(walk_spectrum(cycle_graph(6)));
  CHECK(c6.alpha_star == doctest::Approx(0.4).epsilon(1e-10));
  CHECK(c6.tau_g_star == doctest::Approx(0.6).epsilon(1e-10));

  GdTuning k4 = tune_gd(walk_spectrum(complete_graph(4)));
  CHECK(k4.alpha_star == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(k4.tau_g_star == doctest::Approx(0.0).epsilon(1e-10));

  GdTuning s5 = tune_gd(walk_spectrum(star_graph(5)));
  CHECK(s5.alpha_star == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(s5.tau_g_star == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("regime dispatch picks the matching closed form") {
  auto tuned = [](const Graph& g) {
    return tune(g, classify(g), walk_spectrum(g));
  };

  TuningResult c6 = tuned(cycle_graph(6));
  CHECK(c6.regime == TuningRegime::EvenCycleLowConductance);
  CHECK(c6.tau_star == doctest::Approx(2.0 * std::sqrt(3.0) - 3.0));
  CHECK_FALSE(c6.is_upper_bound_only);

  TuningResult k4 = tuned(complete_graph(4));
  CHECK(k4.regime == TuningRegime::EvenCycleHighConductance);
  CHECK(k4.tau_star == doctest::Approx(1.0 / 3.0));
  CHECK(k4.omega_star == doctest::Approx(-1.0 / 3.0));

  // trees have mirror-symmetric walk spectra (omega_bar = -omega*), which
  // puts the optimal relaxation exactly on the gamma = 2 boundary; at that
  // degenerate point sqrt(omega_bar^2 - omega*^2) amplifies eigensolver
  // round-off (~1e-13) into ~1e-7 of parameter error, so the tolerance here
  // is 1e-6 rather than machine precision
  TuningResult p5 = tuned(path_graph(5));
  CHECK(p5.regime == TuningRegime::NoEvenCycleLowConductance);
  CHECK(p5.gamma_star == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(p5.tau_star == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-6));

  // omega* = 0 leaves every closed form, falling back to an upper bound
  TuningResult p3 = tuned(path_graph(3));
  CHECK(p3.regime == TuningRegime::Unsupported);
  CHECK(p3.is_upper_bound_only);
  CHECK(p3.tau_star == doctest::Approx(1.0 / 3.0));

  // high conductance without a zero-sum edge vector is also uncovered
  TuningResult s5 = tuned(star_graph(5));
  CHECK(s5.regime == TuningRegime::Unsupported);
  CHECK(s5.is_upper_bound_only);

  // the joined-odd-cycle case dispatches on the zero-sum predicate, not on
  // the simple-cycle detector: conductance of the bowtie is 1/2 (cut off
  // one triangle's outer pair: 2 crossing edges over volume 4)
  Graph bowtie =
      build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  TuningResult bt = tune(bowtie, classify(bowtie), walk_spectrum(bowtie));
  CHECK(bt.regime == TuningRegime::EvenCycleLowConductance);
}

TEST_CASE("regime names are stable") {
  CHECK(to_string(TuningRegime::EvenCycleLowConductance) ==
        "EvenCycleLowConductance");
  CHECK(to_string(TuningRegime::NoEvenCycleLowConductance) ==
        "NoEvenCycleLowConductance");
  CHECK(to_string(TuningRegime::EvenCycleHighConductance) ==
        "EvenCycleHighConductance");
  CHECK(to_string(TuningRegime::Unsupported) == "Unsupported");
}

TEST_CASE("tuned parameters sit at a local minimum of the predicted rate") {
  Graph g = cycle_graph(6);
  SpectralReport report = walk_spectrum(g);
  TuningResult r = tune(g, classify(g), walk_spectrum(g));
  const double at_opt =
      second_largest_ta(report, r.rho_star, r.gamma_star, true).modulus;
  CHECK(at_opt == doctest::Approx(r.tau_star).epsilon(1e-9));

  const double h = 1e-3;
  for (double drho : {-h, h}) {
    double perturbed =
        second_largest_ta(report, r.rho_star + drho, r.gamma_star, true)
            .modulus;
    CHECK(perturbed > at_opt + 1e-7);
  }
  for (double dgamma : {-h, h}) {
    double perturbed =
        second_largest_ta(report, r.rho_star, r.gamma_star + dgamma, true)
            .modulus;
    CHECK(perturbed > at_opt + 1e-7);
  }
}
