#include "admm_topo/iterate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "admm_topo/errors.hpp"

namespace admm_topo {

AdmmState init_admm_state(const FactorGraph& fg, const Eigen::VectorXd& z0) {
  if (z0.size() != fg.n_variable_nodes)
    throw DimensionMismatch("z0 length " + std::to_string(z0.size()) +
                            " != vertex count " +
                            std::to_string(fg.n_variable_nodes));
  const int dim = fg.edge_space_dim();
  AdmmState st;
  st.z = z0;
  st.s.resize(dim);
  for (int row = 0; row < dim; ++row) st.s(row) = z0(fg.fg_edges[row].second);
  st.u = Eigen::VectorXd::Zero(dim);
  st.n = st.s;  // n = S z - u
  st.x = Eigen::VectorXd::Zero(dim);
  st.m = Eigen::VectorXd::Zero(dim);
  st.t = 0;
  return st;
}

void admm_message_step(AdmmState& state, const FactorGraph& fg, double rho,
                       double gamma) {
  const int dim = fg.edge_space_dim();
  if (state.n.size() != dim || state.z.size() != fg.n_variable_nodes)
    throw DimensionMismatch("state does not match factor graph");

  // local closed-form solve per function node
  for (int f = 0; f < fg.n_function_nodes; ++f) {
    double lo = state.n(2 * f), hi = state.n(2 * f + 1);
    state.x(2 * f) = ((rho + 1.0) * lo + hi) / (rho + 2.0);
    state.x(2 * f + 1) = ((rho + 1.0) * hi + lo) / (rho + 2.0);
  }
  // messages toward the vertices
  state.m = gamma * state.x + state.u;
  // relaxed vertex averages
  Eigen::VectorXd z_new(fg.n_variable_nodes);
  for (int b = 0; b < fg.n_variable_nodes; ++b) {
    double sum = 0.0;
    for (int row : fg.vertex_rows[b]) sum += state.m(row);
    z_new(b) = (1.0 - gamma) * state.z(b) +
               sum / static_cast<double>(fg.vertex_rows[b].size());
  }
  // dual update and returned messages
  for (int row = 0; row < dim; ++row) {
    int b = fg.fg_edges[row].second;
    state.u(row) += gamma * state.x(row) - z_new(b) +
                    (1.0 - gamma) * state.z(b);
    state.s(row) = z_new(b);
    state.n(row) = z_new(b) - state.u(row);
  }
  state.z = z_new;
  ++state.t;

  if (!state.n.allFinite() || !state.z.allFinite())
    throw NonFiniteState("message-passing state left the finite range at t=" +
                         std::to_string(state.t));
}

Eigen::VectorXd admm_matrix_step(const Eigen::VectorXd& n,
                                 const FactorOperators& ops) {
  if (n.size() != ops.TA.rows())
    throw DimensionMismatch("vector length " + std::to_string(n.size()) +
                            " != edge-space dimension " +
                            std::to_string(ops.TA.rows()));
  return ops.TA * n;
}

Eigen::VectorXd gd_step(const Eigen::VectorXd& z, const Graph& g,
                        double alpha) {
  if (z.size() != g.n_vertices)
    throw DimensionMismatch("vector length " + std::to_string(z.size()) +
                            " != vertex count " +
                            std::to_string(g.n_vertices));
  Eigen::VectorXd out(g.n_vertices);
  for (int v = 0; v < g.n_vertices; ++v) {
    double lap = g.degrees[v] * z(v);
    for (int u : g.adjacency[v]) lap -= z(u);
    out(v) = z(v) - alpha * lap;
  }
  return out;
}

TrajectoryStats measure_rate(const StepFn& step, const Eigen::VectorXd& init,
                             long burn_in, long window) {
  if (burn_in < 0) throw ParameterOutOfRange("burn_in must be >= 0");
  if (window < 50) throw ParameterOutOfRange("window must be >= 50");

  const long recorded = burn_in + window;  // residuals kept for t = 0..recorded
  const long total = 10 * recorded;

  std::vector<Eigen::VectorXd> early;
  early.reserve(recorded + 1);
  Eigen::VectorXd v = init;
  for (long t = 0; t <= total; ++t) {
    if (t <= recorded) early.push_back(v);
    if (t == total) break;
    v = step(v);
    if (!v.allFinite())
      throw Diverged("iterate left the finite range at t=" + std::to_string(t));
  }

  TrajectoryStats stats;
  stats.burn_in = burn_in;
  stats.fixed_point = v;
  stats.residual_history.reserve(recorded + 1);
  for (const Eigen::VectorXd& snapshot : early)
    stats.residual_history.push_back((snapshot - v).norm());

  // cut the usable range where the residual sinks into roundoff
  const double floor = 1e3 * std::numeric_limits<double>::epsilon();
  long hi = recorded;
  for (long t = 0; t <= recorded; ++t) {
    if (stats.residual_history[t] < floor) {
      hi = t;
      break;
    }
  }
  stats.window_used = hi;

  if (hi > burn_in &&
      stats.residual_history[hi] > 10.0 * stats.residual_history[burn_in])
    throw Diverged("residual grew 10x over the fit window");

  // least squares on the log of a 5-step moving maximum, which flattens the
  // parity oscillation of spectra holding +r and -r simultaneously
  const long first = burn_in, last = hi - 5;
  if (last - first + 1 < 5)
    throw WindowTooNoisy("only " + std::to_string(last - first + 1) +
                         " residuals above the roundoff floor");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(last - first + 1);
  std::vector<double> ys;
  ys.reserve(last - first + 1);
  for (long t = first; t <= last; ++t) {
    double peak = 0.0;
    for (long k = t; k < t + 5; ++k)
      peak = std::max(peak, stats.residual_history[k]);
    double y = std::log(peak);
    ys.push_back(y);
    sx += t;
    sy += y;
    sxx += static_cast<double>(t) * t;
    sxy += t * y;
  }
  const double denom = count * sxx - sx * sx;
  const double slope = (count * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / count;
  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / count;
  for (long t = first; t <= last; ++t) {
    double y = ys[t - first];
    double fit = slope * t + intercept;
    ss_res += (y - fit) * (y - fit);
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  stats.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : (ss_res > 0 ? 0.0 : 1.0);
  stats.fitted_rate = std::exp(slope);

  if (stats.r_squared < 0.99)
    throw WindowTooNoisy("rate fit R^2 = " + std::to_string(stats.r_squared));
  return stats;
}

Eigen::VectorXd consensus_value(const Graph& g, const Eigen::VectorXd& z0,
                                double rho, double gamma, long max_iters) {
  FactorGraph fg = build_factor_graph(g);
  AdmmState st = init_admm_state(fg, z0);
  Eigen::VectorXd prev = st.z;
  // complex transient modes can leave z momentarily stationary while the
  // iterate is still far from the limit, so a single small step is not
  // settlement; demand five in a row
  int settled = 0;
  for (long t = 0; t < max_iters; ++t) {
    admm_message_step(st, fg, rho, gamma);
    double delta = (st.z - prev).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, st.z.cwiseAbs().maxCoeff());
    settled = delta < 1e-13 * scale ? settled + 1 : 0;
    if (settled == 5) return st.z;
    prev = st.z;
  }
  throw Diverged("no settled consensus after " + std::to_string(max_iters) +
                 " sweeps");
}

}  // namespace admm_topo
