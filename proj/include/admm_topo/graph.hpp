#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace admm_topo {

// Simple, undirected, connected graph. Edges are stored once as (i, j) with
// i < j in lexicographic order; every downstream operator indexing scheme
// derives from this single canonical order.
struct Graph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
  std::vector<int> degrees;

  int n_edges() const { return static_cast<int>(edges.size()); }
  int min_degree() const;
  int max_degree() const;
  // d_max / d_min
  double degree_ratio() const;
};

// Equality is edge-set equality (plus vertex count).
bool operator==(const Graph& a, const Graph& b);

// Validates and canonicalizes; throws SelfLoop, DuplicateEdge,
// IndexOutOfRange, DisconnectedGraph, TooSmall.
Graph build_graph(int n_vertices, std::vector<std::pair<int, int>> edge_list);

// Deterministic generators.
Graph cycle_graph(int n);     // n >= 3
Graph path_graph(int n);      // n >= 2
Graph complete_graph(int n);  // n >= 2
Graph star_graph(int n);      // n >= 2 total vertices; vertex 0 is the hub
// 4-cycle 0-1-2-3 plus apex 4 joined to 0 and 1. Used as the built-in
// five-vertex example with transition-matrix second eigenvalue exactly 1/3
// and conductance exactly 1/2.
Graph house_graph();

// Samples edges independently with probability p, resampling (same engine
// stream, bounded retries) until connected. Deterministic given seed.
Graph erdos_renyi_graph(int n, double p, std::uint64_t seed);

// Text format: first line "n m", then m lines "i j" (0-based). '#' starts a
// comment anywhere on a line; blank lines are skipped.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
std::string to_edge_list(const Graph& g);

// True iff the graph contains a simple cycle of even length. Decided per
// biconnected block: a block that is a single edge has no cycle; a block
// that is exactly one cycle is even iff its length is; a block with more
// edges than vertices contains two cycles sharing a path, and of the three
// cycle lengths a+b, b+c, a+c formed by the three path lengths a, b, c at
// least one is even (all three odd would make their even sum 2(a+b+c) odd).
bool has_even_cycle(const Graph& g);

// True when some nonzero weighting of the edges sums to zero at every
// vertex, i.e. the unsigned vertex-edge incidence matrix has a nontrivial
// kernel. For a connected graph that kernel has dimension m - n + 1 when
// the graph is bipartite and m - n otherwise, so the condition is: at
// least two independent cycles, or exactly one and it has even length.
// This is the exact criterion for the update matrix to carry the
// reflection eigenvalue 1 - gamma. It is implied by an even simple cycle
// but strictly weaker: two odd cycles joined at a vertex or by a path
// admit such a weighting (with non-unit weight on the connecting path)
// while every simple cycle is odd.
bool has_zero_sum_edge_vector(const Graph& g);

// Minimum over nonempty proper vertex subsets s with vol(s) <= n_vertices of
// cut(s) / vol(s), vol(s) = sum of degrees inside s. Exhaustive; throws
// TooLargeForExactConductance above the limit.
double conductance(const Graph& g, int brute_force_limit = 20);

struct TopologyClass {
  bool even_cycle = false;
  double phi = 0.0;  // conductance, possibly caller-supplied
  bool low_conductance = false;  // phi <= 1/2
  double delta_ratio = 1.0;      // d_max / d_min
};

TopologyClass classify(const Graph& g,
                       std::optional<double> conductance_override = {});

}  // namespace admm_topo
