#ifndef COPSI_GRAPH_HPP
#define COPSI_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace copsi {

// Vertex subset of a host graph, one bit per vertex label.
using VertexSet = std::uint64_t;

// Largest supported order; matches the graph6 short-form ceiling.
inline constexpr int max_order = 62;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

inline int popcount(VertexSet s) { return std::popcount(s); }

inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Simple undirected graph on dense labels 0..order-1, adjacency as bitset rows.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) {
    if (order < 0 || order > max_order)
      throw std::domain_error("Graph: order must be in [0, " +
                              std::to_string(max_order) + "]");
    adj_.assign(static_cast<std::size_t>(order), 0);
  }

  int order() const { return static_cast<int>(adj_.size()); }

  int size() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += popcount(row);
    return twice / 2;
  }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
  }

  VertexSet neighbors(int v) const { return adj_[v]; }

  int degree(int v) const { return popcount(adj_[v]); }

  VertexSet all_vertices() const {
    return order() == 0 ? 0 : (~VertexSet{0} >> (64 - order()));
  }

  // Edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Degree multiset, ascending.
  std::vector<int> degree_sequence() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

// Named families.
Graph make_star(int rays);       // K_{1,n}: vertex 0 joined to 1..n
Graph make_path(int order);      // P_m, order >= 1
Graph make_cycle(int order);     // C_m, order >= 3
Graph make_complete(int order);  // K_m, order >= 0

// Connectivity of the whole graph (order 0 is not connected).
bool is_connected(const Graph& g);

// Connectivity of the subgraph induced on s; the empty set is not connected.
bool is_connected(const Graph& g, VertexSet s);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> host_labels;  // new label -> host label, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// Relabels g by perm: vertex v of g becomes perm[v].
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

struct Graph6ParseError : std::runtime_error {
  Graph6ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) +
                           ")"),
        offset(offset) {}
  std::size_t offset;
};

// graph6 short form: order byte 63+m, then the upper triangle column-major,
// 6 bits per byte MSB-first, zero-padded, each byte offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

// Uniform random connected graph: random spanning tree plus independent
// extra edges. Deterministic for a fixed rng state.
Graph random_connected_graph(std::mt19937_64& rng, int max_order,
                             double extra_edge_prob = 0.3);

}  // namespace copsi

#endif  // COPSI_GRAPH_HPP
