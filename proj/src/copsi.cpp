#include "copsi/copsi.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace copsi {

BigInt copsi_naive(const Graph& g, const CopsiOptions& opt) {
  std::vector<VertexSet> subsets = connected_subsets(g, opt.subset_cap);
  struct Entry {
    Graph graph;
    std::vector<int> degrees;
  };
  std::vector<Entry> entries;
  entries.reserve(subsets.size());
  for (VertexSet s : subsets) {
    Entry e{induced_subgraph(g, s).graph, {}};
    e.degrees = e.graph.degree_sequence();
    entries.push_back(std::move(e));
  }
  BigInt total = 0;
  for (const Entry& from : entries)
    for (const Entry& to : entries) {
      if (from.degrees != to.degrees) continue;  // no isomorphisms possible
      total += count_isomorphisms(from.graph, to.graph);
    }
  return total;
}

namespace {

BigInt class_term(const SubgraphClass& cls) {
  BigInt mult(static_cast<unsigned long>(cls.multiplicity));
  return mult * mult * cls.aut;
}

}  // namespace

BigInt copsi_classes(const Graph& g, const CopsiOptions& opt) {
  SubgraphClassTable table = classify_connected_subgraphs(g, opt.subset_cap);
  BigInt total = 0;
  for (const SubgraphClass& cls : table.classes) total += class_term(cls);
  return total;
}

CopsiBreakdown copsi_breakdown(const Graph& g, const CopsiOptions& opt) {
  SubgraphClassTable table = classify_connected_subgraphs(g, opt.subset_cap);
  CopsiBreakdown out{0, 0, 0, 0};
  for (const SubgraphClass& cls : table.classes) {
    BigInt term = class_term(cls);
    switch (cls.representative.size()) {
      case 0: out.singleton += term; break;
      case 1: out.edge += term; break;
      default: out.third += term; break;
    }
  }
  out.total = out.singleton + out.edge + out.third;
  return out;
}

BigInt psin_complete_formula(int n) {
  if (n < 0) throw std::domain_error("psin_complete_formula: n must be >= 0");
  BigInt total = 0;
  for (int i = 0; i <= n; ++i) {
    BigInt choose = binomial(n, i);
    total += choose * choose * factorial(i);
  }
  return total;
}

BigInt copsi_complete_formula(int n) { return psin_complete_formula(n) - 1; }

std::pair<BigInt, BigInt> star_formula_summands(int n) {
  if (n < 0) throw std::domain_error("star_formula: n must be >= 0");
  return {2 * BigInt(n) * (n + 1), psin_complete_formula(n)};
}

BigInt star_formula(int n) {
  auto [quadratic, psin] = star_formula_summands(n);
  return quadratic + psin;
}

BigInt path_formula(int m) {
  if (m < 1) throw std::domain_error("path_formula: order must be >= 1");
  BigInt mm(m);
  BigInt numerator = mm * (2 * mm * mm + 1);
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 3))
    throw std::logic_error("path_formula: m(2m^2+1) not divisible by 3");
  return numerator / 3;
}

BigInt cycle_formula(int m) {
  if (m < 3) throw std::domain_error("cycle_formula: order must be >= 3");
  BigInt mm(m);
  return mm * (2 * mm * mm - 3 * mm + 2);
}

BigInt count_all_partial_symmetries(const Graph& g) {
  if (g.order() > 12)
    throw std::domain_error(
        "count_all_partial_symmetries: order above desk scale (12)");
  struct Entry {
    Graph graph;
    std::vector<int> degrees;
  };
  std::vector<Entry> entries;
  std::uint64_t subset_count = std::uint64_t{1} << g.order();
  entries.reserve(subset_count);
  for (std::uint64_t s = 0; s < subset_count; ++s) {
    Entry e{induced_subgraph(g, s).graph, {}};
    e.degrees = e.graph.degree_sequence();
    entries.push_back(std::move(e));
  }
  BigInt total = 0;
  for (const Entry& from : entries)
    for (const Entry& to : entries) {
      if (from.degrees != to.degrees) continue;
      total += count_isomorphisms(from.graph, to.graph);
    }
  return total;
}

namespace {

std::vector<Graph> connected_graphs_up_to_order(int order_bound) {
  std::vector<Graph> out;
  for (int m = 1; m <= order_bound; ++m)
    for (Graph& g : graphs_of_order(m))
      if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

// Edge bijection induced by a vertex map: index i holds the h-edge index
// that g-edge i lands on.
std::vector<int> induced_edge_bijection(
    const std::vector<std::pair<int, int>>& g_edges,
    const std::map<std::pair<int, int>, int>& h_edge_index,
    const std::vector<int>& image) {
  std::vector<int> out;
  out.reserve(g_edges.size());
  for (auto [u, v] : g_edges) {
    int a = image[u], b = image[v];
    if (a > b) std::swap(a, b);
    out.push_back(h_edge_index.at({a, b}));
  }
  return out;
}

std::string describe_map(const std::vector<int>& image) {
  std::ostringstream os;
  for (std::size_t v = 0; v < image.size(); ++v)
    os << (v ? " " : "") << v << "->" << image[v];
  return os.str();
}

}  // namespace

RigidityReport verify_lemma_rigidity(int order_bound) {
  if (order_bound < 1 || order_bound > max_order_parameter)
    throw std::domain_error("verify_lemma_rigidity: order bound must be in [1, " +
                            std::to_string(max_order_parameter) + "]");
  RigidityReport report;
  report.pass = true;
  for (const Graph& g : connected_graphs_up_to_order(order_bound)) {
    ++report.graphs_checked;
    std::vector<std::pair<int, int>> g_edges = g.edges();

    std::set<std::string> seen;
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Graph h = apply_permutation(g, perm);
      if (!seen.insert(graph6_encode(h)).second) continue;
      ++report.relabelings_checked;

      std::map<std::pair<int, int>, int> h_edge_index;
      for (auto edge : h.edges())
        h_edge_index.emplace(edge, static_cast<int>(h_edge_index.size()));

      std::map<std::vector<int>, std::vector<int>> by_edge_bijection;
      for (const std::vector<int>& image : enumerate_isomorphisms(g, h)) {
        ++report.isomorphisms_checked;
        std::vector<int> edge_bij =
            induced_edge_bijection(g_edges, h_edge_index, image);
        auto [it, inserted] = by_edge_bijection.emplace(edge_bij, image);
        if (inserted) continue;
        if (g.size() == 1) {
          report.counterexample_found = true;
        } else {
          report.pass = false;
          if (report.witness.empty()) {
            std::ostringstream os;
            os << "graph " << graph6_encode(g) << " target " << graph6_encode(h)
               << ": maps [" << describe_map(it->second) << "] and ["
               << describe_map(image) << "] share an edge bijection";
            report.witness = os.str();
          }
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return report;
}

namespace {

std::vector<BigInt> evaluate_candidates(const std::vector<Graph>& reps,
                                        int jobs, const CopsiOptions& opt) {
  std::vector<BigInt> values(reps.size());
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      values[i] = copsi_classes(reps[i], opt);
      if (i % 10 == 0 && copsi_naive(reps[i], opt) != values[i])
        throw std::logic_error("engine disagreement on " +
                               graph6_encode(reps[i]));
    }
  };
  if (jobs <= 1 || reps.size() < 2) {
    worker(0, reps.size());
  } else {
    std::size_t workers = std::min<std::size_t>(jobs, reps.size());
    std::vector<std::future<void>> parts;
    for (std::size_t w = 0; w < workers; ++w)
      parts.push_back(std::async(std::launch::async, worker,
                                 reps.size() * w / workers,
                                 reps.size() * (w + 1) / workers));
    for (auto& part : parts) part.get();
  }
  return values;
}

ExtremalReport build_extremal(ExtremalReport::Kind kind, int parameter,
                              const std::vector<Graph>& reps, int jobs,
                              const CopsiOptions& opt) {
  std::vector<BigInt> values = evaluate_candidates(reps, jobs, opt);
  ExtremalReport report;
  report.kind = kind;
  report.parameter = parameter;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::string g6 = graph6_encode(reps[i]);  // reps are canonical forms
    report.candidates.push_back({CanonicalCode{g6}, g6, values[i]});
  }
  std::sort(report.candidates.begin(), report.candidates.end(),
            [](const ExtremalCandidate& a, const ExtremalCandidate& b) {
              return a.copsi != b.copsi ? a.copsi > b.copsi : a.code < b.code;
            });
  report.maximum = report.candidates.front().copsi;
  for (const ExtremalCandidate& c : report.candidates)
    if (c.copsi == report.maximum) report.maximizers.push_back(c.code);
  return report;
}

}  // namespace

ExtremalReport extremal_by_size(int n, int jobs, const CopsiOptions& opt) {
  return build_extremal(ExtremalReport::Kind::by_size, n,
                        connected_graphs_of_size(n), jobs, opt);
}

ExtremalReport extremal_by_order(int m, int jobs, const CopsiOptions& opt) {
  if (m < 1 || m > max_extremal_order)
    throw std::domain_error("extremal_by_order: order must be in [1, " +
                            std::to_string(max_extremal_order) + "]");
  return build_extremal(ExtremalReport::Kind::by_order, m, graphs_of_order(m),
                        jobs, opt);
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "star") return Family::star;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  return std::nullopt;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::star: return "star";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
  }
  return "?";
}

int sequence_first_parameter(Family family) {
  switch (family) {
    case Family::star:
    case Family::complete: return 0;
    case Family::path: return 1;
    case Family::cycle: return 3;
  }
  return 0;
}

std::vector<BigInt> sequence_values(Family family, int count) {
  if (count < 0) throw std::domain_error("sequence: count must be >= 0");
  std::vector<BigInt> out;
  out.reserve(count);
  int first = sequence_first_parameter(family);
  for (int k = first; k < first + count; ++k) {
    switch (family) {
      case Family::star: out.push_back(star_formula(k)); break;
      case Family::path: out.push_back(path_formula(k)); break;
      case Family::cycle: out.push_back(cycle_formula(k)); break;
      case Family::complete: out.push_back(copsi_complete_formula(k)); break;
    }
  }
  return out;
}

namespace {

bool engines_agree(const Graph& g, std::string& detail) {
  BigInt naive = copsi_naive(g);
  BigInt classes = copsi_classes(g);
  BigInt breakdown = copsi_breakdown(g).total;
  if (naive == classes && classes == breakdown) return true;
  std::ostringstream os;
  os << "engine mismatch on " << graph6_encode(g) << ": naive=" << naive
     << " classes=" << classes << " breakdown=" << breakdown;
  detail = os.str();
  return false;
}

}  // namespace

VerifyReport verify_engines(int order_bound, int random_count,
                            int random_max_order, std::uint64_t seed) {
  VerifyReport report;
  std::string detail;
  std::uint64_t exhaustive = 0;
  for (const Graph& g : connected_graphs_up_to_order(order_bound)) {
    ++exhaustive;
    if (!engines_agree(g, detail)) {
      report.ok = false;
      report.lines.push_back(detail);
    }
  }
  report.lines.push_back("engines agree on all " + std::to_string(exhaustive) +
                         " connected graphs of order <= " +
                         std::to_string(order_bound));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    Graph g = random_connected_graph(rng, random_max_order);
    if (!engines_agree(g, detail)) {
      report.ok = false;
      report.lines.push_back(detail);
    }
  }
  report.lines.push_back("engines agree on " + std::to_string(random_count) +
                         " random connected graphs of order <= " +
                         std::to_string(random_max_order));
  return report;
}

VerifyReport verify_formulas(int star_max, int path_max, int cycle_max) {
  VerifyReport report;
  auto check = [&](const std::string& label, const BigInt& formula,
                   const BigInt& brute) {
    if (formula == brute) return;
    report.ok = false;
    report.lines.push_back(label + ": formula " + to_string(formula) +
                           " != brute force " + to_string(brute));
  };
  for (int n = 0; n <= star_max; ++n)
    check("star n=" + std::to_string(n), star_formula(n),
          copsi_naive(make_star(n)));
  report.lines.push_back("star formula matches brute force for n <= " +
                         std::to_string(star_max));
  for (int m = 1; m <= path_max; ++m)
    check("path m=" + std::to_string(m), path_formula(m),
          copsi_naive(make_path(m)));
  report.lines.push_back("path formula matches brute force for m <= " +
                         std::to_string(path_max));
  for (int m = 3; m <= cycle_max; ++m)
    check("cycle m=" + std::to_string(m), cycle_formula(m),
          copsi_naive(make_cycle(m)));
  report.lines.push_back("cycle formula matches brute force for m <= " +
                         std::to_string(cycle_max));
  return report;
}

VerifyReport verify_lemma(int order_bound) {
  RigidityReport rigidity = verify_lemma_rigidity(order_bound);
  VerifyReport report;
  report.ok = rigidity.pass &&
              (order_bound < 2 || rigidity.counterexample_found);
  std::ostringstream os;
  os << "rigidity over " << rigidity.graphs_checked
     << " connected graphs of order <= " << order_bound << " ("
     << rigidity.relabelings_checked << " relabelings, "
     << rigidity.isomorphisms_checked
     << " isomorphisms): " << (rigidity.pass ? "pass" : "FAIL");
  report.lines.push_back(os.str());
  if (!rigidity.pass) report.lines.push_back("witness: " + rigidity.witness);
  report.lines.push_back(std::string("single-edge counterexample: ") +
                         (rigidity.counterexample_found ? "found"
                                                        : "not in range"));
  return report;
}

}  // namespace copsi
