#include <doctest.h>

#include <map>
#include <set>

#include "copsi/copsi.hpp"
#include "test_util.hpp"

using namespace copsi;

TEST_CASE("closed forms at frozen values") {
  const long star_values[] = {1, 6, 19, 58, 249, 1606, 13411};
  for (int n = 0; n <= 6; ++n) CHECK(star_formula(n) == star_values[n]);

  const long path_values[] = {1, 6, 19, 44, 85, 146, 231, 344, 489};
  for (int m = 1; m <= 9; ++m) CHECK(path_formula(m) == path_values[m - 1]);

  const long cycle_values[] = {33, 88, 185, 336, 553, 848};
  for (int m = 3; m <= 8; ++m) CHECK(cycle_formula(m) == cycle_values[m - 3]);

  const long psin_values[] = {1, 2, 7, 34, 209, 1546, 13327};
  for (int n = 0; n <= 6; ++n)
    CHECK(psin_complete_formula(n) == psin_values[n]);
  CHECK(copsi_complete_formula(3) == 33);
  CHECK(copsi_complete_formula(3) == cycle_formula(3));

  CHECK_THROWS_AS(cycle_formula(2), std::domain_error);
  CHECK_THROWS_AS(path_formula(0), std::domain_error);
  CHECK_THROWS_AS(star_formula(-1), std::domain_error);
}

TEST_CASE("path formula stays integral far out") {
  for (int m = 1; m <= 500; ++m) CHECK(path_formula(m) > 0);
}

TEST_CASE("engines on named graphs") {
  CHECK(copsi_naive(make_complete(2)) == 6);
  CHECK(copsi_naive(make_complete(1)) == 1);
  CHECK(copsi_naive(make_path(3)) == 19);
  CHECK(copsi_classes(make_path(3)) == 19);
  CHECK(copsi_classes(make_complete(3)) == 33);
  CHECK(copsi_classes(make_complete(1)) == 1);
  CHECK(copsi_naive(make_complete(0)) == 0);
  CHECK(copsi_naive(make_star(3)) == 58);
}

TEST_CASE("engines match the subset-pair definition directly") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) {
    Graph g = test::random_graph(rng, 5);
    BigInt expected = test::brute_copsi(g);
    CHECK(copsi_naive(g) == expected);
    CHECK(copsi_classes(g) == expected);
  }
}

TEST_CASE("breakdown on named graphs") {
  CopsiBreakdown star3 = copsi_breakdown(make_star(3));
  CHECK(star3.singleton == 16);
  CHECK(star3.edge == 18);
  CHECK(star3.third == 24);
  CHECK(star3.total == 58);

  CopsiBreakdown k1 = copsi_breakdown(make_complete(1));
  CHECK(k1.singleton == 1);
  CHECK(k1.edge == 0);
  CHECK(k1.third == 0);

  CopsiBreakdown k2 = copsi_breakdown(make_complete(2));
  CHECK(k2.singleton == 4);
  CHECK(k2.edge == 2);
  CHECK(k2.third == 0);
}

TEST_CASE("breakdown law: singleton = order^2 and edge = 2 size^2") {
  for (int m = 1; m <= 4; ++m) {
    test::for_each_labeled_graph(m, [&](const Graph& g) {
      CopsiBreakdown split = copsi_breakdown(g);
      CHECK(split.singleton == BigInt(g.order()) * g.order());
      CHECK(split.edge == 2 * BigInt(g.size()) * g.size());
      CHECK(split.total == split.singleton + split.edge + split.third);
    });
  }
}

TEST_CASE("engines agree exhaustively on small sizes and random hosts") {
  for (int n = 0; n <= 4; ++n)
    for (const Graph& g : connected_graphs_of_size(n)) {
      BigInt naive = copsi_naive(g);
      CHECK(naive == copsi_classes(g));
      CHECK(naive == copsi_breakdown(g).total);
    }

  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    Graph g = random_connected_graph(rng, 7);
    BigInt naive = copsi_naive(g);
    CHECK(naive == copsi_classes(g));
    CHECK(naive == copsi_breakdown(g).total);
  }
}

TEST_CASE("all partial symmetries, empty and disconnected included") {
  CHECK(count_all_partial_symmetries(make_complete(1)) == 2);
  CHECK(count_all_partial_symmetries(Graph(2)) == 7);
  for (int n = 0; n <= 4; ++n)
    CHECK(count_all_partial_symmetries(make_complete(n)) ==
          psin_complete_formula(n));

  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    Graph g = test::random_graph(rng, 4);
    CHECK(count_all_partial_symmetries(g) ==
          test::brute_all_partial_symmetries(g));
  }
}

TEST_CASE("complete graphs: dropping the empty symmetry gives copsi") {
  for (int n = 0; n <= 4; ++n)
    CHECK(count_all_partial_symmetries(make_complete(n)) - 1 ==
          copsi_naive(make_complete(n)));
}

TEST_CASE("star identities in exact arithmetic out to n = 50") {
  for (int n = 0; n <= 50; ++n) {
    BigInt star = star_formula(n);
    CHECK(star == BigInt(n) * n + BigInt(n + 1) * (n + 1) +
                      copsi_complete_formula(n));
    CHECK(star - 2 * BigInt(n) * (n + 1) == psin_complete_formula(n));
    auto [quadratic, psin] = star_formula_summands(n);
    CHECK(quadratic + psin == star);
  }
}

TEST_CASE("lemma rigidity reports") {
  RigidityReport bound4 = verify_lemma_rigidity(4);
  CHECK(bound4.pass);
  CHECK(bound4.counterexample_found);
  CHECK(bound4.graphs_checked == 10);  // connected graphs of order <= 4

  RigidityReport bound1 = verify_lemma_rigidity(1);
  CHECK(bound1.pass);
  CHECK_FALSE(bound1.counterexample_found);  // no single edge in range

  CHECK_THROWS_AS(verify_lemma_rigidity(7), std::domain_error);
  CHECK_THROWS_AS(verify_lemma_rigidity(0), std::domain_error);

  CHECK(verify_lemma(4).ok);
  CHECK(verify_lemma(1).ok);
}

TEST_CASE("path of length three obstructs full edge-permutation freedom") {
  Graph p4 = make_path(4);
  auto symmetries = enumerate_isomorphisms(p4, p4);
  REQUIRE(symmetries.size() == 2);

  // edges 0:{0,1} 1:{1,2} 2:{2,3}; collect the realized edge permutations
  auto edges = p4.edges();
  std::map<std::pair<int, int>, int> edge_index;
  for (auto e : edges) edge_index.emplace(e, static_cast<int>(edge_index.size()));
  std::set<std::vector<int>> realized;
  for (const auto& image : symmetries) {
    std::vector<int> edge_perm;
    for (auto [u, v] : edges) {
      int a = image[u], b = image[v];
      if (a > b) std::swap(a, b);
      edge_perm.push_back(edge_index.at({a, b}));
    }
    realized.insert(edge_perm);

    // fixing the middle edge pointwise forces the identity, so no symmetry
    // both fixes it pointwise and swaps the outer edges
    if (image[1] == 1 && image[2] == 2)
      CHECK(edge_perm == std::vector<int>{0, 1, 2});
  }

  // only the identity and the full reversal are realizable; the other four
  // edge permutations (all moving the middle edge) are obstructions
  CHECK(realized ==
        std::set<std::vector<int>>{{0, 1, 2}, {2, 1, 0}});
  for (const auto& perm : realized)
    CHECK(perm[1] == 1);  // the middle edge never lands on an outer edge
}

TEST_CASE("extremal search by size") {
  ExtremalReport n3 = extremal_by_size(3);
  REQUIRE(n3.candidates.size() == 3);
  CHECK(n3.maximum == 58);
  REQUIRE(n3.maximizers.size() == 1);
  CHECK(n3.maximizers[0] == canonical_code(make_star(3)));
  CHECK(n3.candidates[0].copsi == 58);
  CHECK(n3.candidates[1].copsi == 44);
  CHECK(n3.candidates[2].copsi == 33);

  ExtremalReport n1 = extremal_by_size(1);
  REQUIRE(n1.candidates.size() == 1);
  CHECK(n1.maximum == 6);

  ExtremalReport n2 = extremal_by_size(2);
  REQUIRE(n2.candidates.size() == 1);
  CHECK(n2.maximum == 19);

  ExtremalReport n0 = extremal_by_size(0);
  REQUIRE(n0.candidates.size() == 1);
  CHECK(n0.maximum == 1);
}

TEST_CASE("extremal search by order") {
  ExtremalReport m3 = extremal_by_order(3);
  CHECK(m3.candidates.size() == 4);
  CHECK(m3.maximum == 33);
  REQUIRE(m3.maximizers.size() == 1);
  CHECK(m3.maximizers[0] == canonical_code(make_complete(3)));

  ExtremalReport m1 = extremal_by_order(1);
  CHECK(m1.maximum == 1);

  ExtremalReport m2 = extremal_by_order(2);
  CHECK(m2.maximum == 6);
  REQUIRE(m2.candidates.size() == 2);
  CHECK(m2.candidates[1].copsi == 4);  // the edgeless pair

  CHECK_THROWS_AS(extremal_by_order(6), std::domain_error);
}

TEST_CASE("star maximum is strict for small sizes") {
  for (int n = 3; n <= 4; ++n) {
    ExtremalReport report = extremal_by_size(n);
    CHECK(report.maximum == star_formula(n));
    for (std::size_t i = 1; i < report.candidates.size(); ++i)
      CHECK(report.candidates[i].copsi < report.maximum);
  }
}

TEST_CASE("extremal evaluation is identical across worker counts") {
  ExtremalReport serial = extremal_by_size(4, 1);
  ExtremalReport parallel = extremal_by_size(4, 3);
  REQUIRE(serial.candidates.size() == parallel.candidates.size());
  for (std::size_t i = 0; i < serial.candidates.size(); ++i) {
    CHECK(serial.candidates[i].code == parallel.candidates[i].code);
    CHECK(serial.candidates[i].copsi == parallel.candidates[i].copsi);
  }
  CHECK(serial.maximizers == parallel.maximizers);
}

TEST_CASE("sequences") {
  auto star5 = sequence_values(Family::star, 5);
  CHECK(star5 == std::vector<BigInt>{1, 6, 19, 58, 249});
  auto path4 = sequence_values(Family::path, 4);
  CHECK(path4 == std::vector<BigInt>{1, 6, 19, 44});
  auto cycle3 = sequence_values(Family::cycle, 3);
  CHECK(cycle3 == std::vector<BigInt>{33, 88, 185});
  auto complete4 = sequence_values(Family::complete, 4);
  CHECK(complete4 == std::vector<BigInt>{0, 1, 6, 33});
  CHECK(sequence_values(Family::star, 1) == std::vector<BigInt>{1});

  const long quadratic[] = {0, 4, 12, 24};
  for (int n = 0; n <= 3; ++n)
    CHECK(star_formula_summands(n).first == quadratic[n]);

  CHECK(parse_family("star") == Family::star);
  CHECK_FALSE(parse_family("tree").has_value());
  CHECK(family_name(Family::cycle) == "cycle");
}

TEST_CASE("feasibility cap refuses oversized hosts") {
  // K_{1,17} has 17 + 2^17 connected subsets, above the default cap
  CHECK_THROWS_AS(copsi_naive(make_star(17)), CapExceededError);
  CHECK_THROWS_AS(copsi_classes(make_star(17), CopsiOptions{500}),
                  CapExceededError);
  CHECK_NOTHROW(copsi_classes(make_star(8), CopsiOptions{500}));
}

TEST_CASE("verification suites") {
  VerifyReport engines = verify_engines(4, 20, 6, 99);
  CHECK(engines.ok);
  VerifyReport formulas = verify_formulas(3, 5, 5);
  CHECK(formulas.ok);
}
