#pragma once

#include <string>
#include <vector>

#include "admm_topo/graph.hpp"
#include "admm_topo/spectral.hpp"
#include "admm_topo/tuning.hpp"

namespace admm_topo {

// Machine-checkable record of the ADMM-vs-gradient-descent comparison on
// one graph: the two-sided bound (1-tau_a)^2 <= 2*Delta*(1-tau_g) and the
// square-root-speedup inequality 1-tau_a >= C*sqrt(1-tau_g) evaluated at a
// fixed C = 1/2 plus the gap-dependent C reported by the theory.
struct SpeedupCertificate {
  double tau_a_star = 0.0;
  double tau_g_star = 0.0;
  double delta = 0.0;       // spectral gap 1 - omega*
  double delta_ratio = 0.0; // d_max / d_min
  double lhs = 0.0;         // (1 - tau_a)^2
  double rhs_upper = 0.0;   // 2 * delta_ratio * (1 - tau_g)
  double ratio = 0.0;       // lhs / (1 - tau_g)
  bool sandwich_holds = false;
  bool conjecture_holds_numerically = false;  // at C = 1/2
  double reported_C = 0.0;  // max(0, 1 - 2 sqrt(2 delta))
  bool upper_bound_only = false;  // tau_a came from a fallback bound
  TuningRegime regime = TuningRegime::Unsupported;
};

SpeedupCertificate speedup_certificate(const Graph& g);

// Same certificate from precomputed parts, for callers that already hold
// the classification (for instance with a caller-supplied conductance).
SpeedupCertificate speedup_certificate(const Graph& g,
                                       const TopologyClass& topo,
                                       const SpectralReport& report);

struct CycleFamilyRow {
  int n = 0;
  double delta = 0.0;
  double tau_a = 0.0;
  double tau_g = 0.0;
  double ratio = 0.0;  // (1 - tau_a)^2 / (1 - tau_g)
  bool bound_ok = false;  // ratio <= 2 (the degree ratio of a cycle is 1)
};

// Closed-form sweep over even cycles: omega* = cos(2 pi / n) and Laplacian
// extremes 2 - 2 cos(2 pi / n), 4 give every entry exactly.
std::vector<CycleFamilyRow> cycle_family_sweep(const std::vector<int>& sizes);

struct BoundCheck {
  std::string name;
  bool holds = false;
  double slack = 0.0;  // >= 0 when the inequality is satisfied exactly
};

// Index-wise Laplacian bounds d_min * nl_i <= l_i <= d_max * nl_i, the
// largest-eigenvalue bracket d_max <= l_max <= 2 d_max, and the optimal-GD
// corollaries tau_g >= (1-delta)/(1+delta), tau_g <= (2D-delta)/(2D+delta).
std::vector<BoundCheck> laplacian_bound_check(const SpectralReport& report,
                                              const Graph& g);

// 1 - 2 phi <= omega* <= 1 - phi^2 / 2.
std::vector<BoundCheck> cheeger_check(const TopologyClass& topo,
                                      const SpectralReport& report);

}  // namespace admm_topo
