#ifndef COPSI_COPSI_HPP
#define COPSI_COPSI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copsi/bigint.hpp"
#include "copsi/enumerate.hpp"
#include "copsi/graph.hpp"
#include "copsi/subiso.hpp"

namespace copsi {

struct CopsiOptions {
  // Engines refuse hosts with more connected subsets than this.
  std::size_t subset_cap = 100000;
};

// copsi(g): the number of isomorphisms between connected induced subgraphs.
// Sum of count_isomorphisms over all ordered pairs of connected subsets.
BigInt copsi_naive(const Graph& g, const CopsiOptions& opt = {});

// Same value via the class table: within one isomorphism class every ordered
// pair of subsets admits exactly aut isomorphisms, across classes none, so
// the total is sum of multiplicity^2 * aut.
BigInt copsi_classes(const Graph& g, const CopsiOptions& opt = {});

// Split by the size of the subgraphs involved: singleton symmetries
// (order-1 sides), edge symmetries (single-edge sides), and the rest
// (both sides of size >= 2).
struct CopsiBreakdown {
  BigInt singleton;
  BigInt edge;
  BigInt third;
  BigInt total;
};

CopsiBreakdown copsi_breakdown(const Graph& g, const CopsiOptions& opt = {});

// Closed forms, exact arithmetic.
BigInt star_formula(int n);   // copsi(K_{1,n}) = 2n(n+1) + sum C(n,i)^2 i!
BigInt path_formula(int m);   // copsi(P_m) = m(2m^2+1)/3, the octahedral numbers
BigInt cycle_formula(int m);  // copsi(C_m) = m(2m^2-3m+2), m >= 3

// Partial symmetry index of K_n: sum_{i=0..n} C(n,i)^2 i!, counting the
// empty symmetry; copsi(K_n) is one less.
BigInt psin_complete_formula(int n);
BigInt copsi_complete_formula(int n);

// The two summands of star_formula: (2n(n+1), psin(K_n)).
std::pair<BigInt, BigInt> star_formula_summands(int n);

// Isomorphisms between all ordered pairs of induced subgraphs, connected or
// not, including the empty pair (which contributes exactly 1).
BigInt count_all_partial_symmetries(const Graph& g);

// Exhaustive check that distinct isomorphisms between connected graphs of
// size != 1 always induce distinct edge bijections, over all connected
// graphs of order <= order_bound and all of their relabelings, plus the
// single-edge counterexample where two isomorphisms share one.
struct RigidityReport {
  bool pass = false;
  bool counterexample_found = false;
  std::uint64_t graphs_checked = 0;
  std::uint64_t relabelings_checked = 0;
  std::uint64_t isomorphisms_checked = 0;
  std::string witness;  // violating pair, when pass is false
};

RigidityReport verify_lemma_rigidity(int order_bound);

struct ExtremalCandidate {
  CanonicalCode code;
  std::string graph6;  // same bytes as code; kept as the display field
  BigInt copsi;
};

struct ExtremalReport {
  enum class Kind { by_size, by_order };
  Kind kind;
  int parameter = 0;
  // Sorted by copsi descending, then code ascending.
  std::vector<ExtremalCandidate> candidates;
  BigInt maximum;
  std::vector<CanonicalCode> maximizers;
};

// Evaluates copsi_classes on every candidate (spot-checking every 10th with
// copsi_naive) and reports the maximum and all maximizers.
ExtremalReport extremal_by_size(int n, int jobs = 1,
                                const CopsiOptions& opt = {});
ExtremalReport extremal_by_order(int m, int jobs = 1,
                                 const CopsiOptions& opt = {});

inline constexpr int max_extremal_order = 5;

enum class Family { star, path, cycle, complete };

std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family family);

// Leading formula values: star and complete start at parameter 0, path at
// order 1, cycle at order 3.
std::vector<BigInt> sequence_values(Family family, int count);
int sequence_first_parameter(Family family);

// Verification suites shared by the CLI and the acceptance harness.
struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// naive == classes == breakdown.total on all connected graphs of order <=
// order_bound plus seeded random connected graphs.
VerifyReport verify_engines(int order_bound, int random_count = 100,
                            int random_max_order = 8,
                            std::uint64_t seed = 0xC095150DULL);

// Closed forms against brute force over the stated parameter ranges.
VerifyReport verify_formulas(int star_max = 6, int path_max = 9,
                             int cycle_max = 8);

VerifyReport verify_lemma(int order_bound);

}  // namespace copsi

#endif  // COPSI_COPSI_HPP
