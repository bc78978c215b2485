#ifndef COPSI_ENUMERATE_HPP
#define COPSI_ENUMERATE_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsi/bigint.hpp"
#include "copsi/graph.hpp"
#include "copsi/subiso.hpp"

namespace copsi {

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(std::size_t cap)
      : std::runtime_error("connected subset count exceeds cap " +
                           std::to_string(cap)),
        cap(cap) {}
  std::size_t cap;
};

inline constexpr std::size_t no_subset_cap =
    std::numeric_limits<std::size_t>::max();

// All non-empty vertex subsets inducing connected subgraphs, each exactly
// once, ascending by popcount then by bitset value. Enumeration extends
// connected sets by frontier vertices with a forbidden set, so no global
// dedup is needed. Throws CapExceededError when more than cap subsets exist.
std::vector<VertexSet> connected_subsets(const Graph& g,
                                         std::size_t cap = no_subset_cap);

struct SubgraphClass {
  Graph representative;  // canonical form
  CanonicalCode code;
  std::uint64_t multiplicity = 0;  // host vertex subsets inducing this class
  BigInt aut;                      // automorphism count of the representative
};

// Connected induced subgraphs of a host grouped by isomorphism class,
// sorted by code.
struct SubgraphClassTable {
  std::vector<SubgraphClass> classes;
  std::uint64_t total_subsets = 0;
};

// jobs > 1 splits the subset list across threads; per-worker tables merge by
// code into the same result as a single worker.
SubgraphClassTable classify_connected_subgraphs(const Graph& g,
                                                std::size_t cap = no_subset_cap,
                                                int jobs = 1);

// Largest size parameter connected_graphs_of_size accepts.
inline constexpr int max_size_parameter = 8;

// One representative (canonical form) per isomorphism class of connected
// graphs with exactly n edges, over every feasible order m <= n+1, sorted by
// (order, code). Exhaustive by edge-subset enumeration with a
// degree-sequence pre-bucket before canonical dedup.
std::vector<Graph> connected_graphs_of_size(int n);

// Largest order graphs_of_order accepts.
inline constexpr int max_order_parameter = 6;

// One representative per isomorphism class of all simple graphs of order m,
// connected or not, sorted by code.
std::vector<Graph> graphs_of_order(int m);

}  // namespace copsi

#endif  // COPSI_ENUMERATE_HPP
