#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "admm_topo/graph.hpp"
#include "admm_topo/rng.hpp"
#include "admm_topo/spectral.hpp"

namespace test_support {

// Largest singular value through the library's own symmetric eigensolver.
inline double spectral_norm_2(const Eigen::MatrixXd& m) {
  std::vector<double> eigs = admm_topo::symmetric_eigs(m.transpose() * m);
  return std::sqrt(eigs.back());
}

// Deterministic mixed bag of small connected graphs for property tests:
// sparse draws land trees and single-cycle graphs, denser draws land
// multi-cycle graphs.
inline std::vector<admm_topo::Graph> random_graph_corpus(int count,
                                                         int n_min = 4,
                                                         int n_max = 10,
                                                         std::uint64_t seed0 =
                                                             1000) {
  std::vector<admm_topo::Graph> graphs;
  graphs.reserve(count);
  for (int k = 0; k < count; ++k) {
    int n = n_min + k % (n_max - n_min + 1);
    admm_topo::Rng rng(seed0 + k);
    double p = k % 4 == 0 ? 0.18 : 0.25 + 0.35 * rng.u01();
    graphs.push_back(admm_topo::erdos_renyi_graph(n, p, seed0 + 100 + k));
  }
  return graphs;
}

// Exhaustive simple-cycle scan: grows paths from every start vertex using
// only vertices >= start, closing a cycle back at the start. Exponential,
// fine for n <= 10.
inline bool brute_force_even_cycle(const admm_topo::Graph& g) {
  int n = g.n_vertices;
  std::vector<char> on_path(n, 0);
  bool found = false;
  auto dfs = [&](auto&& self, int start, int v, int length) -> void {
    if (found) return;
    for (int w : g.adjacency[v]) {
      if (w == start && length >= 3 && length % 2 == 0) {
        found = true;
        return;
      }
      if (w > start && !on_path[w]) {
        on_path[w] = 1;
        self(self, start, w, length + 1);
        on_path[w] = 0;
      }
    }
  };
  for (int start = 0; start < n && !found; ++start) {
    on_path[start] = 1;
    dfs(dfs, start, start, 1);
    on_path[start] = 0;
  }
  return found;
}

// Rank deficiency of the unsigned vertex-edge incidence matrix, the
// independent oracle for has_zero_sum_edge_vector.
inline bool brute_force_zero_sum_vector(const admm_topo::Graph& g) {
  int n = g.n_vertices, m = g.n_edges();
  Eigen::MatrixXd incidence = Eigen::MatrixXd::Zero(n, m);
  for (int e = 0; e < m; ++e) {
    incidence(g.edges[e].first, e) = 1.0;
    incidence(g.edges[e].second, e) = 1.0;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(incidence);
  lu.setThreshold(1e-10);
  return lu.rank() < m;
}

// Subset scan recomputing each cut from scratch; the library's
// incremental version must agree with this.
inline double brute_force_conductance(const admm_topo::Graph& g) {
  int n = g.n_vertices;
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    double vol = 0.0;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) vol += g.degrees[v];
    if (vol > n) continue;
    double cut = 0.0;
    for (auto [a, b] : g.edges) {
      bool ia = mask & (1u << a), ib = mask & (1u << b);
      if (ia != ib) cut += 1.0;
    }
    best = std::min(best, cut / vol);
  }
  return best;
}

inline Eigen::VectorXd random_vector(int n, std::uint64_t seed) {
  admm_topo::Rng rng(seed);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.uniform(-1.0, 1.0);
  return v;
}

}  // namespace test_support
