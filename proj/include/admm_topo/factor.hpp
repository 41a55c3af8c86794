#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "admm_topo/graph.hpp"

namespace admm_topo {

// Bipartite pairing of one function node per graph edge with the two
// variable nodes (vertices) that edge touches. fg_edges is the canonical
// row order of every edge-space vector and operator: function node a for
// graph edge (i, j) with i < j contributes rows 2a = (a, i) and
// 2a+1 = (a, j), with a running in the graph's lexicographic edge order.
struct FactorGraph {
  int n_function_nodes = 0;
  int n_variable_nodes = 0;
  std::vector<std::pair<int, int>> fg_edges;   // (function node, vertex)
  std::vector<std::vector<int>> vertex_rows;   // vertex -> incident row ids

  int edge_space_dim() const { return static_cast<int>(fg_edges.size()); }
};

FactorGraph build_factor_graph(const Graph& g);

// Dense operators on the edge space. S gathers vertex values onto fg-edges;
// R swaps the two rows of each function node; B averages within each
// vertex's rows (the projector onto vertex-consistent vectors); A is the
// per-function-node solve ((rho+1)I + R)/(rho+2), assembled in closed form
// rather than by inverting I + Q/rho. TA is the one-step update matrix of
// the reduced iteration, built as I - gamma*(A + B - 2BA).
struct FactorOperators {
  FactorGraph fg;
  double rho = 0.0;
  double gamma = 0.0;
  Eigen::MatrixXd S, Q, R, B, Btilde, Omega, OmegaS, A, U, TA;
};

// Requires rho > 0 and gamma in (0, 2); throws ParameterOutOfRange.
FactorOperators build_operators(const FactorGraph& fg, double rho,
                                double gamma);

// TA * v without touching the dense matrix: per-function-node closed-form
// solve plus per-vertex averaging. The dense product is the reference; both
// paths agree to 1e-12.
Eigen::VectorXd apply_ta(const FactorOperators& ops, const Eigen::VectorXd& v);

}  // namespace admm_topo
