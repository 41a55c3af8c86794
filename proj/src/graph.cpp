#include "admm_topo/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <sstream>

#include "admm_topo/errors.hpp"
#include "admm_topo/rng.hpp"

namespace admm_topo {

int Graph::min_degree() const {
  return *std::min_element(degrees.begin(), degrees.end());
}

int Graph::max_degree() const {
  return *std::max_element(degrees.begin(), degrees.end());
}

double Graph::degree_ratio() const {
  return static_cast<double>(max_degree()) / min_degree();
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_vertices == b.n_vertices && a.edges == b.edges;
}

namespace {

bool is_connected(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

}  // namespace

Graph build_graph(int n_vertices, std::vector<std::pair<int, int>> edge_list) {
  if (n_vertices < 2) throw TooSmall("graph needs at least 2 vertices");
  if (edge_list.empty()) throw TooSmall("edge list is empty");
  for (auto& [i, j] : edge_list) {
    if (i == j) throw SelfLoop("self loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_vertices)
      throw IndexOutOfRange("edge (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside [0," +
                            std::to_string(n_vertices) + ")");
  }
  std::sort(edge_list.begin(), edge_list.end());
  for (std::size_t k = 1; k < edge_list.size(); ++k) {
    if (edge_list[k] == edge_list[k - 1])
      throw DuplicateEdge("duplicate edge (" +
                          std::to_string(edge_list[k].first) + "," +
                          std::to_string(edge_list[k].second) + ")");
  }

  Graph g;
  g.n_vertices = n_vertices;
  g.edges = std::move(edge_list);
  g.adjacency.assign(n_vertices, {});
  for (auto [i, j] : g.edges) {
    g.adjacency[i].push_back(j);
    g.adjacency[j].push_back(i);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  g.degrees.resize(n_vertices);
  for (int v = 0; v < n_vertices; ++v)
    g.degrees[v] = static_cast<int>(g.adjacency[v].size());

  if (!is_connected(n_vertices, g.adjacency))
    throw DisconnectedGraph("graph is not connected");
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw TooSmall("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return build_graph(n, std::move(e));
}

Graph path_graph(int n) {
  if (n < 2) throw TooSmall("path needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, std::move(e));
}

Graph complete_graph(int n) {
  if (n < 2) throw TooSmall("complete graph needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, std::move(e));
}

Graph star_graph(int n) {
  if (n < 2) throw TooSmall("star needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return build_graph(n, std::move(e));
}

Graph house_graph() {
  return build_graph(5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}});
}

Graph erdos_renyi_graph(int n, double p, std::uint64_t seed) {
  if (n < 2) throw TooSmall("random graph needs n >= 2");
  if (!(p > 0.0 && p <= 1.0))
    throw ParameterOutOfRange("edge probability must be in (0, 1]");
  Rng rng(seed);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.u01() < p) e.emplace_back(i, j);
    if (e.empty()) continue;
    try {
      return build_graph(n, std::move(e));
    } catch (const DisconnectedGraph&) {
      // resample from the same stream
    }
  }
  throw GenerationFailed("no connected sample after " +
                         std::to_string(kMaxAttempts) + " attempts");
}

Graph parse_edge_list(std::istream& in) {
  auto next_data_line = [&in](std::string& line) -> bool {
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };

  std::string line;
  if (!next_data_line(line)) throw ParseError("empty edge-list input");
  std::istringstream header(line);
  int n = 0, m = 0;
  if (!(header >> n >> m)) throw ParseError("expected header line 'n m'");
  if (m <= 0) throw ParseError("edge count must be positive");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  while (static_cast<int>(edges.size()) < m) {
    if (!next_data_line(line))
      throw ParseError("expected " + std::to_string(m) + " edges, got " +
                       std::to_string(edges.size()));
    std::istringstream row(line);
    int i = 0, j = 0;
    while (row >> i) {
      if (!(row >> j)) throw ParseError("dangling vertex index: " + line);
      edges.emplace_back(i, j);
    }
  }
  return build_graph(n, std::move(edges));
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n_vertices << ' ' << g.n_edges() << '\n';
  for (auto [i, j] : g.edges) out << i << ' ' << j << '\n';
  return out.str();
}

namespace {

// Depth-first biconnected-block decomposition; calls visit(block_edges) for
// every maximal 2-connected block (bridges come out as single-edge blocks).
void for_each_block(
    const Graph& g,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  int n = g.n_vertices;
  std::vector<int> depth(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> edge_stack;

  // iterative DFS: frame = (vertex, parent, next-neighbor index)
  struct Frame {
    int v, parent;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    low[root] = 0;
    stack.push_back({root, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.adjacency[f.v].size()) {
        int u = g.adjacency[f.v][f.next++];
        if (u == f.parent) continue;
        if (depth[u] == -1) {
          edge_stack.emplace_back(f.v, u);
          depth[u] = depth[f.v] + 1;
          low[u] = depth[u];
          stack.push_back({u, f.v});
        } else if (depth[u] < depth[f.v]) {
          edge_stack.emplace_back(f.v, u);  // back edge
          low[f.v] = std::min(low[f.v], depth[u]);
        }
      } else {
        int v = f.v, parent = f.parent;
        stack.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= depth[parent]) {
            // pop the block rooted at edge (parent, v)
            std::vector<std::pair<int, int>> block;
            while (!edge_stack.empty()) {
              auto e = edge_stack.back();
              edge_stack.pop_back();
              block.push_back(e);
              if (e == std::make_pair(parent, v)) break;
            }
            visit(block);
          }
        }
      }
    }
  }
}

}  // namespace

bool has_even_cycle(const Graph& g) {
  bool found = false;
  for_each_block(g, [&found](const std::vector<std::pair<int, int>>& block) {
    if (found || block.size() < 2) return;
    std::vector<int> verts;
    for (auto [a, b] : block) {
      verts.push_back(a);
      verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (block.size() > verts.size()) {
      found = true;  // theta subgraph: some even cycle is unavoidable
    } else {
      // block.size() == verts.size(): the block is a single simple cycle
      found = block.size() % 2 == 0;
    }
  });
  return found;
}

bool has_zero_sum_edge_vector(const Graph& g) {
  int independent_cycles = g.n_edges() - g.n_vertices + 1;
  return independent_cycles >= 2 ||
         (independent_cycles == 1 && has_even_cycle(g));
}

double conductance(const Graph& g, int brute_force_limit) {
  int n = g.n_vertices;
  if (n > brute_force_limit)
    throw TooLargeForExactConductance(
        "exhaustive conductance limited to " + std::to_string(brute_force_limit) +
        " vertices; pass a conductance override or raise the limit");

  // Gray-code walk over all subsets, maintaining volume and cut value
  // incrementally: toggling vertex v changes the cut by deg(v) - 2 * (links
  // from v into the current subset).
  std::vector<char> in_set(n, 0);
  long vol = 0;
  long cut = 0;
  double best = 2.0;  // any feasible value is <= 1
  const std::uint64_t total = 1ull << n;
  std::uint64_t prev_gray = 0;
  for (std::uint64_t k = 1; k < total; ++k) {
    std::uint64_t gray = k ^ (k >> 1);
    int v = std::countr_zero(gray ^ prev_gray);
    prev_gray = gray;
    int links_in = 0;
    for (int u : g.adjacency[v]) links_in += in_set[u];
    if (in_set[v]) {
      in_set[v] = 0;
      vol -= g.degrees[v];
      cut -= g.degrees[v] - 2 * links_in;
    } else {
      in_set[v] = 1;
      vol += g.degrees[v];
      cut += g.degrees[v] - 2 * links_in;
    }
    int popcount = std::popcount(gray);
    if (popcount == 0 || popcount == n) continue;  // nonempty proper subsets
    if (vol <= n) best = std::min(best, static_cast<double>(cut) / vol);
  }
  return best;
}

TopologyClass classify(const Graph& g,
                       std::optional<double> conductance_override) {
  TopologyClass tc;
  tc.even_cycle = has_even_cycle(g);
  tc.phi = conductance_override ? *conductance_override : conductance(g);
  tc.low_conductance = tc.phi <= 0.5;
  tc.delta_ratio = g.degree_ratio();
  return tc;
}

}  // namespace admm_topo
