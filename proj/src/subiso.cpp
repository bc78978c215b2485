#include "copsi/subiso.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace copsi {

namespace {

// Backtracking over vertex assignments. Candidate sets are bitmasks refined
// by degree and by adjacency consistency with the vertices assigned so far.
class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<int> domain_order,
            const std::function<void(const std::vector<int>&)>* visit)
      : g_(g), h_(h), order_(std::move(domain_order)), visit_(visit) {
    int m = g_.order();
    image_.assign(m, -1);
    base_.resize(m);
    for (int d = 0; d < m; ++d) {
      VertexSet cand = 0;
      for (int w = 0; w < m; ++w)
        if (h_.degree(w) == g_.degree(order_[d])) cand |= vertex_bit(w);
      base_[d] = cand;
    }
  }

  std::uint64_t run() {
    descend(0);
    return leaves_;
  }

 private:
  void descend(int depth) {
    if (depth == g_.order()) {
      ++leaves_;
      if (visit_) (*visit_)(image_);
      return;
    }
    int u = order_[depth];
    VertexSet cand = base_[depth] & ~used_;
    for (int d = 0; d < depth && cand; ++d) {
      int prev = order_[d];
      VertexSet nbrs = h_.neighbors(image_[prev]);
      cand &= g_.has_edge(u, prev) ? nbrs : ~nbrs;
    }
    while (cand) {
      int w = lowest_vertex(cand);
      cand &= cand - 1;
      image_[u] = w;
      used_ |= vertex_bit(w);
      descend(depth + 1);
      used_ &= ~vertex_bit(w);
    }
    image_[u] = -1;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> order_;
  const std::function<void(const std::vector<int>&)>* visit_;
  std::vector<int> image_;
  std::vector<VertexSet> base_;
  VertexSet used_ = 0;
  std::uint64_t leaves_ = 0;
};

bool quick_reject(const Graph& g, const Graph& h) {
  return g.order() != h.order() || g.size() != h.size() ||
         g.degree_sequence() != h.degree_sequence();
}

}  // namespace

BigInt count_isomorphisms(const Graph& g, const Graph& h) {
  if (quick_reject(g, h)) return 0;
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  IsoSearch search(g, h, std::move(order), nullptr);
  return BigInt(static_cast<unsigned long>(search.run()));
}

void for_each_isomorphism(
    const Graph& g, const Graph& h,
    const std::function<void(const std::vector<int>&)>& visit) {
  if (quick_reject(g, h)) return;
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  IsoSearch search(g, h, std::move(order), &visit);
  search.run();
}

std::vector<std::vector<int>> enumerate_isomorphisms(const Graph& g,
                                                     const Graph& h) {
  std::vector<std::vector<int>> out;
  for_each_isomorphism(g, h,
                       [&](const std::vector<int>& image) { out.push_back(image); });
  return out;
}

bool is_valid_partial_symmetry(const Graph& host, const PartialSymmetry& ps) {
  if (popcount(ps.domain) != popcount(ps.codomain)) return false;
  if (ps.map.size() != static_cast<std::size_t>(popcount(ps.domain)))
    return false;
  VertexSet seen_dom = 0, seen_cod = 0;
  int last_dom = -1;
  for (auto [a, fa] : ps.map) {
    if (a <= last_dom) return false;  // sorted by domain vertex
    last_dom = a;
    if (a >= host.order() || fa >= host.order() || a < 0 || fa < 0)
      return false;
    seen_dom |= vertex_bit(a);
    if (seen_cod & vertex_bit(fa)) return false;
    seen_cod |= vertex_bit(fa);
  }
  if (seen_dom != ps.domain || seen_cod != ps.codomain) return false;
  for (auto [a, fa] : ps.map)
    for (auto [b, fb] : ps.map)
      if (host.has_edge(a, b) != host.has_edge(fa, fb)) return false;
  return true;
}

namespace {

// Branch-and-bound over degree-ascending vertex orderings, minimizing the
// column-major upper-triangle bitstring. Placing position d appends exactly
// the d adjacency bits to the already-placed vertices, so prefixes extend
// contiguously and compare directly against the best complete string.
class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), m_(g.order()) {
    position_degree_ = g_.degree_sequence();  // ascending
    bits_.reserve(static_cast<std::size_t>(m_) * (m_ - 1) / 2);
  }

  std::vector<int> run() {
    descend(0, true);
    return best_placed_;
  }

 private:
  // prefix_eq: the bits placed so far coincide with best_'s prefix. When a
  // descendant replaces best_, the current path is best_'s prefix again, so
  // the flag flips back on and pruning resumes against the new incumbent.
  // Returns whether best_ changed anywhere in this subtree.
  bool descend(int depth, bool prefix_eq) {
    if (depth == m_) {
      if (have_best_ && prefix_eq) return false;  // equal to best_, keep it
      best_ = bits_;
      best_placed_ = placed_;
      have_best_ = true;
      return true;
    }
    struct Cand {
      std::uint64_t chunk;
      int vertex;
    };
    std::vector<Cand> cands;
    for (int v = 0; v < m_; ++v) {
      if (used_ & vertex_bit(v)) continue;
      if (g_.degree(v) != position_degree_[depth]) continue;
      std::uint64_t chunk = 0;
      for (int i = 0; i < depth; ++i)
        chunk = (chunk << 1) | (g_.has_edge(placed_[i], v) ? 1 : 0);
      cands.push_back({chunk, v});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.chunk != b.chunk ? a.chunk < b.chunk : a.vertex < b.vertex;
    });
    bool updated = false;
    std::vector<int> tried;
    for (const Cand& c : cands) {
      if (is_twin_of_tried(c.vertex, tried)) continue;
      tried.push_back(c.vertex);
      int cmp = -1;
      if (have_best_ && prefix_eq) {
        cmp = compare_chunk(depth, c.chunk);
        if (cmp > 0) break;  // candidates sorted, the rest are no better
      }
      std::size_t mark = bits_.size();
      for (int i = depth - 1; i >= 0; --i)
        bits_.push_back(static_cast<std::uint8_t>((c.chunk >> i) & 1));
      placed_.push_back(c.vertex);
      used_ |= vertex_bit(c.vertex);
      if (descend(depth + 1, prefix_eq && cmp == 0)) {
        updated = true;
        prefix_eq = true;  // best_ now runs through this node
      }
      used_ &= ~vertex_bit(c.vertex);
      placed_.pop_back();
      bits_.resize(mark);
    }
    return updated;
  }

  // Transposing v with a previously tried candidate that has the same
  // neighborhood away from the pair is an automorphism, so the branch
  // would repeat an explored subtree.
  bool is_twin_of_tried(int v, const std::vector<int>& tried) const {
    for (int u : tried) {
      VertexSet away = ~(vertex_bit(u) | vertex_bit(v));
      if ((g_.neighbors(u) & away) == (g_.neighbors(v) & away)) return true;
    }
    return false;
  }

  int compare_chunk(int depth, std::uint64_t chunk) const {
    std::size_t offset = static_cast<std::size_t>(depth) * (depth - 1) / 2;
    for (int i = depth - 1; i >= 0; --i) {
      std::uint8_t mine = static_cast<std::uint8_t>((chunk >> i) & 1);
      std::uint8_t theirs = best_[offset + (depth - 1 - i)];
      if (mine != theirs) return mine < theirs ? -1 : 1;
    }
    return 0;
  }

  const Graph& g_;
  int m_;
  std::vector<int> position_degree_;
  std::vector<std::uint8_t> bits_, best_;
  std::vector<int> placed_, best_placed_;
  VertexSet used_ = 0;
  bool have_best_ = false;
};

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > max_canonical_order)
    throw std::domain_error("canonical_form: order " +
                            std::to_string(g.order()) + " exceeds bound " +
                            std::to_string(max_canonical_order));
  CanonSearch search(g);
  std::vector<int> placed = search.run();
  std::vector<int> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[placed[pos]] = pos;
  return apply_permutation(g, perm);
}

CanonicalCode canonical_code(const Graph& g) {
  return CanonicalCode{graph6_encode(canonical_form(g))};
}

}  // namespace copsi
