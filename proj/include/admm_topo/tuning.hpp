#pragma once

#include <optional>
#include <string>

#include "admm_topo/graph.hpp"
#include "admm_topo/spectral.hpp"

namespace admm_topo {

enum class TuningRegime {
  EvenCycleLowConductance,
  NoEvenCycleLowConductance,
  EvenCycleHighConductance,
  Unsupported,
};

std::string to_string(TuningRegime regime);

struct TuningResult {
  TuningRegime regime = TuningRegime::Unsupported;
  double rho_star = 0.0;
  double gamma_star = 0.0;
  double tau_star = 0.0;
  double omega_star = 0.0;
  std::optional<double> omega_bar;
  // Set when the closed form does not apply to the topology and the values
  // are only guaranteed to bound the best achievable rate from above.
  bool is_upper_bound_only = false;
};

// Optimal parameters when the graph has an even cycle and conductance at
// most 1/2: rho* closes the discriminant of the omega* pair, gamma*
// equalizes |1-gamma| with the pair modulus, and the best rate is
// gamma* - 1. Requires omega_star in (0, 1).
TuningResult tune_admm_even_cycle(double omega_star);

// Optimal parameters without an even cycle, requiring |omega_bar| >=
// omega_star (HypothesisViolated otherwise). omega_bar = -1 reduces to the
// even-cycle formula.
TuningResult tune_admm_no_even_cycle(double omega_star, double omega_bar);

// Constants (2, 4/3, 1/3) for graphs with an even cycle and conductance
// above 1/2.
TuningResult tune_admm_high_conductance_even_cycle();

struct GdTuning {
  double alpha_star = 0.0;  // 2 / (ell_bar + ell_star)
  double tau_g_star = 0.0;  // (ell_bar - ell_star) / (ell_bar + ell_star)
};

GdTuning tune_gd(const SpectralReport& report);

// Regime dispatch over (even cycle, conductance, spectrum hypotheses).
// Unsupported topologies still carry parameter values flagged
// is_upper_bound_only: the even-cycle formula at omega* when omega* is in
// (0, 1), else its omega* -> 0 limit (2, 4/3, 1/3), which bounds every
// nonpositive-omega* spectrum as well.
TuningResult tune(const Graph& g, const TopologyClass& topo,
                  const SpectralReport& report);

}  // namespace admm_topo
