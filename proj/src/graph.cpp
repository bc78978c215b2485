#include "copsi/graph.hpp"

#include <algorithm>

namespace copsi {

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    VertexSet higher = adj_[u] >> (u + 1) << (u + 1);
    while (higher) {
      int v = lowest_vertex(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs(order());
  for (int v = 0; v < order(); ++v) degs[v] = degree(v);
  std::sort(degs.begin(), degs.end());
  return degs;
}

Graph make_star(int rays) {
  if (rays < 0) throw std::domain_error("make_star: ray count must be >= 0");
  Graph g(rays + 1);
  for (int leaf = 1; leaf <= rays; ++leaf) g.add_edge(0, leaf);
  return g;
}

Graph make_path(int order) {
  if (order < 1) throw std::domain_error("make_path: order must be >= 1");
  Graph g(order);
  for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int order) {
  if (order < 3) throw std::domain_error("make_cycle: order must be >= 3");
  Graph g(order);
  for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  g.add_edge(order - 1, 0);
  return g;
}

Graph make_complete(int order) {
  if (order < 0) throw std::domain_error("make_complete: order must be >= 0");
  Graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
  return g;
}

bool is_connected(const Graph& g, VertexSet s) {
  if (s == 0) return false;
  VertexSet reached = vertex_bit(lowest_vertex(s));
  VertexSet frontier = reached;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int v = lowest_vertex(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v) & s & ~reached;
    }
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

bool is_connected(const Graph& g) { return is_connected(g, g.all_vertices()); }

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  InducedSubgraph out;
  VertexSet rest = s;
  while (rest) {
    out.host_labels.push_back(lowest_vertex(rest));
    rest &= rest - 1;
  }
  int m = static_cast<int>(out.host_labels.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(out.host_labels[i], out.host_labels[j]))
        out.graph.add_edge(i, j);
  return out;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

std::string graph6_encode(const Graph& g) {
  int m = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + m));
  int bit_pos = 5;
  unsigned char byte = 0;
  int pair_bits = m * (m - 1) / 2;
  for (int col = 1; col < m; ++col) {
    for (int row = 0; row < col; ++row) {
      if (g.has_edge(row, col)) byte |= static_cast<unsigned char>(1 << bit_pos);
      if (--bit_pos < 0) {
        out.push_back(static_cast<char>(63 + byte));
        byte = 0;
        bit_pos = 5;
      }
    }
  }
  if (pair_bits % 6 != 0) out.push_back(static_cast<char>(63 + byte));
  return out;
}

Graph graph6_decode(const std::string& text) {
  if (text.empty()) throw Graph6ParseError("graph6: empty input", 0);
  unsigned char head = static_cast<unsigned char>(text[0]);
  if (head == 126)
    throw Graph6ParseError("graph6: long form (order > 62) not supported", 0);
  if (head < 63 || head > 126)
    throw Graph6ParseError("graph6: order byte out of range", 0);
  int m = head - 63;
  int pair_bits = m * (m - 1) / 2;
  std::size_t expected = 1 + (pair_bits + 5) / 6;
  if (text.size() < expected)
    throw Graph6ParseError("graph6: truncated, missing edge bits", text.size());
  if (text.size() > expected)
    throw Graph6ParseError("graph6: trailing bytes after edge bits", expected);
  Graph g(m);
  int bit = 0;
  for (std::size_t pos = 1; pos < expected; ++pos) {
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw Graph6ParseError("graph6: edge byte out of range", pos);
    unsigned char group = c - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      bool set = (group >> k) & 1;
      if (bit >= pair_bits) {
        if (set) throw Graph6ParseError("graph6: nonzero padding bits", pos);
        continue;
      }
      if (set) {
        // bit index -> (row, col) in column-major upper triangle
        int col = 1;
        int before = 0;
        while (before + col <= bit) before += col++;
        g.add_edge(bit - before, col);
      }
    }
  }
  return g;
}

Graph random_connected_graph(std::mt19937_64& rng, int max_order,
                             double extra_edge_prob) {
  int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_order));
  Graph g(m);
  for (int v = 1; v < m; ++v)
    g.add_edge(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
  auto threshold = static_cast<std::uint64_t>(
      extra_edge_prob * static_cast<double>(~std::uint64_t{0}));
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (!g.has_edge(u, v) && rng() < threshold) g.add_edge(u, v);
  return g;
}

}  // namespace copsi
