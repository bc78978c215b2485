#include "copsi/enumerate.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace copsi {

namespace {

class SubsetCollector {
 public:
  SubsetCollector(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<VertexSet> collect() {
    for (int v = 0; v < g_.order(); ++v) {
      // sets whose minimum vertex is v never touch smaller labels
      VertexSet universe = g_.all_vertices() >> v << v;
      extend(vertex_bit(v), universe, 0);
    }
    std::sort(out_.begin(), out_.end(), [](VertexSet a, VertexSet b) {
      int pa = popcount(a), pb = popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    return std::move(out_);
  }

 private:
  void extend(VertexSet s, VertexSet universe, VertexSet forbidden) {
    if (out_.size() >= cap_) throw CapExceededError(cap_);
    out_.push_back(s);
    VertexSet frontier = 0;
    VertexSet rest = s;
    while (rest) {
      int v = lowest_vertex(rest);
      rest &= rest - 1;
      frontier |= g_.neighbors(v);
    }
    frontier &= universe & ~s & ~forbidden;
    while (frontier) {
      int u = lowest_vertex(frontier);
      frontier &= frontier - 1;
      extend(s | vertex_bit(u), universe, forbidden);
      forbidden |= vertex_bit(u);
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<VertexSet> out_;
};

}  // namespace

std::vector<VertexSet> connected_subsets(const Graph& g, std::size_t cap) {
  return SubsetCollector(g, cap).collect();
}

namespace {

struct ClassAccumulator {
  std::map<CanonicalCode, std::uint64_t> multiplicity;
};

ClassAccumulator classify_range(const Graph& g,
                                const std::vector<VertexSet>& subsets,
                                std::size_t begin, std::size_t end) {
  ClassAccumulator acc;
  for (std::size_t i = begin; i < end; ++i) {
    CanonicalCode code = canonical_code(induced_subgraph(g, subsets[i]).graph);
    ++acc.multiplicity[code];
  }
  return acc;
}

}  // namespace

SubgraphClassTable classify_connected_subgraphs(const Graph& g,
                                                std::size_t cap, int jobs) {
  std::vector<VertexSet> subsets = connected_subsets(g, cap);
  ClassAccumulator merged;
  if (jobs <= 1 || subsets.size() < 2) {
    merged = classify_range(g, subsets, 0, subsets.size());
  } else {
    std::size_t workers = std::min<std::size_t>(jobs, subsets.size());
    std::vector<std::future<ClassAccumulator>> parts;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t begin = subsets.size() * w / workers;
      std::size_t end = subsets.size() * (w + 1) / workers;
      parts.push_back(std::async(std::launch::async, classify_range,
                                 std::cref(g), std::cref(subsets), begin,
                                 end));
    }
    for (auto& part : parts)
      for (auto& [code, mult] : part.get().multiplicity)
        merged.multiplicity[code] += mult;
  }

  SubgraphClassTable table;
  for (auto& [code, mult] : merged.multiplicity) {
    SubgraphClass cls;
    cls.representative = graph6_decode(code.bytes);
    cls.code = code;
    cls.multiplicity = mult;
    cls.aut = automorphism_count(cls.representative);
    table.total_subsets += mult;
    table.classes.push_back(std::move(cls));
  }
  return table;
}

namespace {

// All C(pool, take) index combinations, lexicographic.
template <typename Fn>
void for_each_combination(int pool, int take, Fn&& fn) {
  if (take > pool) return;
  std::vector<int> idx(take);
  for (int i = 0; i < take; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = take - 1;
    while (i >= 0 && idx[i] == pool - take + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::pair<int, int>> all_pairs(int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

std::vector<Graph> connected_graphs_of_size(int n) {
  if (n < 0 || n > max_size_parameter)
    throw std::domain_error("connected_graphs_of_size: size must be in [0, " +
                            std::to_string(max_size_parameter) + "]");
  std::vector<Graph> reps;
  for (int m = 1; m <= n + 1; ++m) {
    if (m * (m - 1) / 2 < n) continue;  // not enough vertex pairs
    std::vector<std::pair<int, int>> pairs = all_pairs(m);
    std::map<std::vector<int>, std::map<CanonicalCode, Graph>> buckets;
    for_each_combination(
        static_cast<int>(pairs.size()), n, [&](const std::vector<int>& idx) {
          Graph g(m);
          for (int i : idx) g.add_edge(pairs[i].first, pairs[i].second);
          if (!is_connected(g)) return;
          auto& bucket = buckets[g.degree_sequence()];
          Graph canon = canonical_form(g);
          bucket.try_emplace(CanonicalCode{graph6_encode(canon)},
                             std::move(canon));
        });
    std::map<CanonicalCode, Graph> by_code;
    for (auto& [degs, bucket] : buckets)
      for (auto& [code, rep] : bucket) by_code.emplace(code, std::move(rep));
    for (auto& [code, rep] : by_code) reps.push_back(std::move(rep));
  }
  return reps;
}

std::vector<Graph> graphs_of_order(int m) {
  if (m < 1 || m > max_order_parameter)
    throw std::domain_error("graphs_of_order: order must be in [1, " +
                            std::to_string(max_order_parameter) + "]");
  std::vector<std::pair<int, int>> pairs = all_pairs(m);
  std::map<CanonicalCode, Graph> by_code;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    Graph g(m);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    Graph canon = canonical_form(g);
    by_code.try_emplace(CanonicalCode{graph6_encode(canon)}, std::move(canon));
  }
  std::vector<Graph> reps;
  for (auto& [code, rep] : by_code) reps.push_back(std::move(rep));
  return reps;
}

}  // namespace copsi
