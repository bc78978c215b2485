#ifndef COPSI_SUBISO_HPP
#define COPSI_SUBISO_HPP

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "copsi/bigint.hpp"
#include "copsi/graph.hpp"

namespace copsi {

// An isomorphism between induced subgraphs of one host graph.
struct PartialSymmetry {
  VertexSet domain = 0;
  VertexSet codomain = 0;
  // (host vertex, host vertex) pairs, sorted by domain vertex.
  std::vector<std::pair<int, int>> map;
};

// Checks bijectivity between exactly the members of domain/codomain and
// edge preservation both ways within the host.
bool is_valid_partial_symmetry(const Graph& host, const PartialSymmetry& ps);

// Number of edge-preserving bijections g -> h. Equals the automorphism
// count when g and h are the same graph; 0 when orders, sizes or degree
// multisets differ. The internal counter is 64-bit: the search visits every
// bijection it counts, so totals near 2^64 are unreachable in any run that
// terminates.
BigInt count_isomorphisms(const Graph& g, const Graph& h);

// Calls visit(image) once per edge-preserving bijection g -> h, where
// image[v] is the h-vertex assigned to g-vertex v, in lexicographic order
// of the image sequence.
void for_each_isomorphism(const Graph& g, const Graph& h,
                          const std::function<void(const std::vector<int>&)>& visit);

std::vector<std::vector<int>> enumerate_isomorphisms(const Graph& g,
                                                     const Graph& h);

inline BigInt automorphism_count(const Graph& g) {
  return count_isomorphisms(g, g);
}

// Total-order key equal for two graphs iff they are isomorphic.
struct CanonicalCode {
  // graph6 of the canonical relabeling, so codes sort by order first and
  // decode back to a representative.
  std::string bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

// Largest order canonical_code accepts. Beyond this, the permutation
// search over a single degree class gets too wide.
inline constexpr int max_canonical_order = 12;

// Minimal upper-triangle adjacency bitstring over all vertex orderings that
// sort degrees ascending; the search prunes by degree blocks, prefix
// comparison against the best string found, and interchangeable-twin
// skipping. Throws std::domain_error above max_canonical_order.
CanonicalCode canonical_code(const Graph& g);

// The relabeling of g that realizes canonical_code(g).
Graph canonical_form(const Graph& g);

}  // namespace copsi

#endif  // COPSI_SUBISO_HPP
