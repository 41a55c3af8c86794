#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "admm_topo/factor.hpp"
#include "admm_topo/graph.hpp"

namespace admm_topo {

// Full message-passing state. Edge-space vectors are indexed by fg-edge
// rows; z lives on vertices; s caches S*z so the reduced variable
// n = s - u can be formed without a gather.
struct AdmmState {
  Eigen::VectorXd x, m, n, u;  // edge space
  Eigen::VectorXd z;           // vertex space
  Eigen::VectorXd s;           // S * z
  long t = 0;
};

// Standard initialization for reproducible runs: u = 0, n = S*z0.
AdmmState init_admm_state(const FactorGraph& fg, const Eigen::VectorXd& z0);

// One synchronous sweep in update order: local solve x, outgoing messages
// m, vertex averages z, dual update u, returned messages n. The local
// argmin is solved in closed form per function node:
// x_lo = ((rho+1) n_lo + n_hi) / (rho+2) and symmetrically.
void admm_message_step(AdmmState& state, const FactorGraph& fg, double rho,
                       double gamma);

// One multiplication by the dense update matrix; reference for the claim
// that the n-trajectory of the message passing is a linear iteration.
Eigen::VectorXd admm_matrix_step(const Eigen::VectorXd& n,
                                 const FactorOperators& ops);

// Gradient step z - alpha * L * z computed via neighbor sums; matches the
// dense product to 1e-12.
Eigen::VectorXd gd_step(const Eigen::VectorXd& z, const Graph& g, double alpha);

struct TrajectoryStats {
  std::vector<double> residual_history;  // ||v^t - fixed point||, t = 0..
  double fitted_rate = 0.0;
  long burn_in = 0;
  long window_used = 0;  // last t entering the fit (after any floor cut)
  double r_squared = 0.0;
  Eigen::VectorXd fixed_point;
};

using StepFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// Empirical contraction factor: runs 10*(burn_in+window) steps to obtain
// the fixed point, then fits exp(slope) of the log residual over
// [burn_in, burn_in+window] by least squares. Oscillating spectra are
// handled by fitting a 5-step moving maximum; the fit stops early where
// the residual falls under 1e3 * machine epsilon. Throws Diverged when the
// residual grows 10x over the window and WindowTooNoisy when the fit has
// R^2 < 0.99 or almost no points survive the floor.
TrajectoryStats measure_rate(const StepFn& step, const Eigen::VectorXd& init,
                             long burn_in, long window);

// Long-run vertex-space limit of the message passing started from z0 with
// zero duals. With that initialization the limit is the mean of the initial
// edge copies S*z0 (the degree-weighted vertex mean; the plain mean of z0
// on regular graphs) replicated on every vertex.
Eigen::VectorXd consensus_value(const Graph& g, const Eigen::VectorXd& z0,
                                double rho, double gamma,
                                long max_iters = 20000);

}  // namespace admm_topo
