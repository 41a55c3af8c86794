#include "admm_topo/factor.hpp"

#include <string>

#include "admm_topo/errors.hpp"

namespace admm_topo {

FactorGraph build_factor_graph(const Graph& g) {
  FactorGraph fg;
  fg.n_function_nodes = g.n_edges();
  fg.n_variable_nodes = g.n_vertices;
  fg.fg_edges.reserve(2 * g.n_edges());
  fg.vertex_rows.assign(g.n_vertices, {});
  for (int a = 0; a < g.n_edges(); ++a) {
    auto [i, j] = g.edges[a];
    fg.vertex_rows[i].push_back(static_cast<int>(fg.fg_edges.size()));
    fg.fg_edges.emplace_back(a, i);
    fg.vertex_rows[j].push_back(static_cast<int>(fg.fg_edges.size()));
    fg.fg_edges.emplace_back(a, j);
  }
  return fg;
}

FactorOperators build_operators(const FactorGraph& fg, double rho,
                                double gamma) {
  if (!(rho > 0.0))
    throw ParameterOutOfRange("rho must be > 0, got " + std::to_string(rho));
  if (!(gamma > 0.0 && gamma < 2.0))
    throw ParameterOutOfRange("gamma must be in (0, 2), got " +
                              std::to_string(gamma));

  const int dim = fg.edge_space_dim();
  const int n = fg.n_variable_nodes;

  FactorOperators ops;
  ops.fg = fg;
  ops.rho = rho;
  ops.gamma = gamma;

  ops.S = Eigen::MatrixXd::Zero(dim, n);
  for (int row = 0; row < dim; ++row) ops.S(row, fg.fg_edges[row].second) = 1.0;

  ops.R = Eigen::MatrixXd::Zero(dim, dim);
  for (int a = 0; a < fg.n_function_nodes; ++a) {
    ops.R(2 * a, 2 * a + 1) = 1.0;
    ops.R(2 * a + 1, 2 * a) = 1.0;
  }
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(dim, dim);
  ops.Q = identity - ops.R;

  // B = S (S^T S)^-1 S^T with S^T S the diagonal degree matrix
  Eigen::VectorXd inv_deg(n);
  for (int b = 0; b < n; ++b)
    inv_deg(b) = 1.0 / static_cast<double>(fg.vertex_rows[b].size());
  ops.B = ops.S * inv_deg.asDiagonal() * ops.S.transpose();

  ops.Btilde = 2.0 * ops.B - identity;
  ops.Omega = ops.Btilde * ops.R;
  ops.OmegaS = 0.5 * (ops.Omega + ops.Omega.transpose());

  ops.A = ((rho + 1.0) * identity + ops.R) / (rho + 2.0);
  ops.U = ops.Omega + 0.5 * rho * ops.Btilde;
  ops.TA = identity - gamma * (ops.A + ops.B - 2.0 * ops.B * ops.A);
  return ops;
}

Eigen::VectorXd apply_ta(const FactorOperators& ops, const Eigen::VectorXd& v) {
  const FactorGraph& fg = ops.fg;
  const int dim = fg.edge_space_dim();
  if (v.size() != dim)
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " != edge-space dimension " + std::to_string(dim));

  const double rho = ops.rho;
  // a = A v: for each function node mix its two rows
  Eigen::VectorXd a(dim);
  for (int f = 0; f < fg.n_function_nodes; ++f) {
    double lo = v(2 * f), hi = v(2 * f + 1);
    a(2 * f) = ((rho + 1.0) * lo + hi) / (rho + 2.0);
    a(2 * f + 1) = ((rho + 1.0) * hi + lo) / (rho + 2.0);
  }
  // w = B (v - 2a): average over each vertex's rows, broadcast back
  Eigen::VectorXd w(dim);
  for (int b = 0; b < fg.n_variable_nodes; ++b) {
    double sum = 0.0;
    for (int row : fg.vertex_rows[b]) sum += v(row) - 2.0 * a(row);
    double mean = sum / static_cast<double>(fg.vertex_rows[b].size());
    for (int row : fg.vertex_rows[b]) w(row) = mean;
  }
  return v - ops.gamma * (a + w);
}

}  // namespace admm_topo
