#include "admm_topo/analysis.hpp"

#include <cmath>
#include <limits>

#include "admm_topo/errors.hpp"

namespace admm_topo {

SpeedupCertificate speedup_certificate(const Graph& g) {
  return speedup_certificate(g, classify(g), walk_spectrum(g));
}

SpeedupCertificate speedup_certificate(const Graph& g,
                                       const TopologyClass& topo,
                                       const SpectralReport& report) {
  TuningResult admm = tune(g, topo, report);
  GdTuning gd = tune_gd(report);

  SpeedupCertificate cert;
  cert.regime = admm.regime;
  cert.upper_bound_only = admm.is_upper_bound_only;
  cert.tau_a_star = admm.tau_star;
  cert.tau_g_star = gd.tau_g_star;
  cert.delta = report.spectral_gap;
  cert.delta_ratio = topo.delta_ratio;
  cert.lhs = (1.0 - cert.tau_a_star) * (1.0 - cert.tau_a_star);
  cert.rhs_upper = 2.0 * cert.delta_ratio * (1.0 - cert.tau_g_star);
  cert.ratio = cert.lhs / (1.0 - cert.tau_g_star);
  cert.sandwich_holds = cert.lhs <= cert.rhs_upper + 1e-12;
  cert.conjecture_holds_numerically =
      1.0 - cert.tau_a_star >= 0.5 * std::sqrt(1.0 - cert.tau_g_star) - 1e-12;
  cert.reported_C = std::max(0.0, 1.0 - 2.0 * std::sqrt(2.0 * cert.delta));
  return cert;
}

std::vector<CycleFamilyRow> cycle_family_sweep(const std::vector<int>& sizes) {
  std::vector<CycleFamilyRow> rows;
  rows.reserve(sizes.size());
  for (int n : sizes) {
    if (n < 4 || n % 2 != 0)
      throw ParameterOutOfRange("cycle family needs even n >= 4, got " +
                                std::to_string(n));
    CycleFamilyRow row;
    row.n = n;
    const double omega_star = std::cos(2.0 * M_PI / n);
    row.delta = 1.0 - omega_star;
    row.tau_a = tune_admm_even_cycle(omega_star).tau_star;
    const double ell_star = 2.0 - 2.0 * std::cos(2.0 * M_PI / n);
    const double ell_bar = 4.0;  // even cycles peak at the alternating mode
    row.tau_g = (ell_bar - ell_star) / (ell_bar + ell_star);
    row.ratio = (1.0 - row.tau_a) * (1.0 - row.tau_a) / (1.0 - row.tau_g);
    row.bound_ok = row.ratio <= 2.0 + 1e-12;
    rows.push_back(row);
  }
  return rows;
}

std::vector<BoundCheck> laplacian_bound_check(const SpectralReport& report,
                                              const Graph& g) {
  // eigensolver-limited comparisons: tiny negative slack is numerical noise
  constexpr double kTol = 1e-9;
  auto check = [](std::string name, double slack) {
    return BoundCheck{std::move(name), slack >= -kTol, slack};
  };

  std::vector<BoundCheck> out;
  const double d_min = g.min_degree(), d_max = g.max_degree();
  const int n = g.n_vertices;

  double worst_lower = std::numeric_limits<double>::infinity();
  double worst_upper = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    worst_lower = std::min(
        worst_lower, report.lap_eigs[i] - d_min * report.norm_lap_eigs[i]);
    worst_upper = std::min(
        worst_upper, d_max * report.norm_lap_eigs[i] - report.lap_eigs[i]);
  }
  out.push_back(check("d_min * normalized <= laplacian (index-wise)",
                      worst_lower));
  out.push_back(check("laplacian <= d_max * normalized (index-wise)",
                      worst_upper));
  out.push_back(check("d_max <= largest laplacian eigenvalue",
                      report.ell_bar - d_max));
  out.push_back(check("largest laplacian eigenvalue <= 2 d_max",
                      2.0 * d_max - report.ell_bar));

  GdTuning gd = tune_gd(report);
  const double delta = report.spectral_gap;
  const double big_delta = g.degree_ratio();
  out.push_back(check("gd rate >= (1-delta)/(1+delta)",
                      gd.tau_g_star - (1.0 - delta) / (1.0 + delta)));
  out.push_back(check("gd rate <= (2D-delta)/(2D+delta)",
                      (2.0 * big_delta - delta) / (2.0 * big_delta + delta) -
                          gd.tau_g_star));
  return out;
}

std::vector<BoundCheck> cheeger_check(const TopologyClass& topo,
                                      const SpectralReport& report) {
  constexpr double kTol = 1e-9;
  auto check = [](std::string name, double slack) {
    return BoundCheck{std::move(name), slack >= -kTol, slack};
  };
  std::vector<BoundCheck> out;
  out.push_back(check("1 - 2 phi <= omega*",
                      report.omega_star - (1.0 - 2.0 * topo.phi)));
  out.push_back(check("omega* <= 1 - phi^2/2",
                      1.0 - topo.phi * topo.phi / 2.0 - report.omega_star));
  return out;
}

}  // namespace admm_topo
