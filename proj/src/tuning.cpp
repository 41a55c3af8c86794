#include "admm_topo/tuning.hpp"

#include <algorithm>
#include <cmath>

#include "admm_topo/errors.hpp"

namespace admm_topo {

std::string to_string(TuningRegime regime) {
  switch (regime) {
    case TuningRegime::EvenCycleLowConductance:
      return "EvenCycleLowConductance";
    case TuningRegime::NoEvenCycleLowConductance:
      return "NoEvenCycleLowConductance";
    case TuningRegime::EvenCycleHighConductance:
      return "EvenCycleHighConductance";
    case TuningRegime::Unsupported:
      return "Unsupported";
  }
  return "Unsupported";
}

TuningResult tune_admm_even_cycle(double omega_star) {
  if (!(omega_star > 0.0 && omega_star < 1.0))
    throw OmegaOutOfRange("omega_star must be in (0, 1), got " +
                          std::to_string(omega_star));
  TuningResult r;
  r.regime = TuningRegime::EvenCycleLowConductance;
  r.omega_star = omega_star;
  r.rho_star = 2.0 * std::sqrt(1.0 - omega_star * omega_star);
  double s = std::sqrt((2.0 - r.rho_star) / (2.0 + r.rho_star));
  r.gamma_star = 4.0 / (3.0 - s);
  r.tau_star = r.gamma_star - 1.0;
  return r;
}

TuningResult tune_admm_no_even_cycle(double omega_star, double omega_bar) {
  if (!(omega_star > 0.0 && omega_star < 1.0))
    throw OmegaOutOfRange("omega_star must be in (0, 1), got " +
                          std::to_string(omega_star));
  if (!(omega_bar >= -1.0 && omega_bar <= 0.0))
    throw OmegaOutOfRange("omega_bar must be in [-1, 0], got " +
                          std::to_string(omega_bar));
  // tolerance matters for mirror-symmetric (bipartite) spectra, where
  // omega_bar = -omega* holds exactly in theory and to eigensolver
  // precision in practice
  if (std::abs(omega_bar) < omega_star - 1e-9)
    throw HypothesisViolated("|omega_bar| >= omega_star required, got |" +
                             std::to_string(omega_bar) + "| < " +
                             std::to_string(omega_star));
  TuningResult r;
  r.regime = TuningRegime::NoEvenCycleLowConductance;
  r.omega_star = omega_star;
  r.omega_bar = omega_bar;
  r.rho_star = 2.0 * std::sqrt(1.0 - omega_star * omega_star);
  double gap = omega_bar * omega_bar - omega_star * omega_star;
  double root = std::sqrt(std::max(gap, 0.0));
  double denom = 2.0 - (omega_star + omega_bar - root) /
                           (1.0 + std::sqrt(1.0 - omega_star * omega_star));
  r.gamma_star = 4.0 / denom;
  r.tau_star =
      1.0 - (r.gamma_star / 2.0) * (1.0 - 2.0 * omega_star / (2.0 + r.rho_star));
  return r;
}

TuningResult tune_admm_high_conductance_even_cycle() {
  TuningResult r;
  r.regime = TuningRegime::EvenCycleHighConductance;
  r.rho_star = 2.0;
  r.gamma_star = 4.0 / 3.0;
  r.tau_star = 1.0 / 3.0;
  return r;
}

GdTuning tune_gd(const SpectralReport& report) {
  GdTuning t;
  double sum = report.ell_bar + report.ell_star;
  t.alpha_star = 2.0 / sum;
  t.tau_g_star = (report.ell_bar - report.ell_star) / sum;
  return t;
}

namespace {

// Fallback attached to Unsupported regimes. The even-cycle optimum is
// increasing in omega*, so for omega* <= 0 its omega* -> 0+ limit
// (2, 4/3, 1/3) still bounds the achievable rate from above.
TuningResult upper_bound_result(double omega_star) {
  TuningResult r;
  if (omega_star > 0.0 && omega_star < 1.0) {
    r = tune_admm_even_cycle(omega_star);
  } else {
    r = tune_admm_high_conductance_even_cycle();
  }
  r.regime = TuningRegime::Unsupported;
  r.omega_star = omega_star;
  r.is_upper_bound_only = true;
  return r;
}

}  // namespace

TuningResult tune(const Graph& g, const TopologyClass& topo,
                  const SpectralReport& report) {
  const double omega_star = report.omega_star;
  const bool omega_in_range = omega_star > 0.0 && omega_star < 1.0;

  // The operative hypothesis behind the two closed forms is whether the
  // update matrix carries the reflection eigenvalue 1 - gamma: when it
  // does, gamma* balances |1 - gamma| against the complex pair; when it
  // does not, the smallest walk eigenvalue above -1 takes over. That
  // presence is decided by has_zero_sum_edge_vector, which agrees with
  // the even-simple-cycle test except on joined-odd-cycle graphs, where
  // only the former matches the spectrum.
  const bool reflection = has_zero_sum_edge_vector(g);

  if (reflection && !topo.low_conductance) {
    TuningResult r = tune_admm_high_conductance_even_cycle();
    r.omega_star = omega_star;
    if (report.omega_bar_defined) r.omega_bar = report.omega_bar;
    return r;
  }

  if (reflection && topo.low_conductance && omega_in_range)
    return tune_admm_even_cycle(omega_star);

  if (!reflection && topo.low_conductance && omega_in_range &&
      report.omega_bar_defined && report.omega_bar <= 0.0 &&
      std::abs(report.omega_bar) >= omega_star - 1e-9)
    return tune_admm_no_even_cycle(omega_star, report.omega_bar);

  TuningResult r = upper_bound_result(omega_star);
  if (report.omega_bar_defined) r.omega_bar = report.omega_bar;
  return r;
}

}  // namespace admm_topo
