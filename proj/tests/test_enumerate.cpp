#include <doctest.h>

#include <set>

#include "copsi/enumerate.hpp"
#include "test_util.hpp"

using namespace copsi;

TEST_CASE("connected subsets of a path") {
  // popcount-then-value order: {0},{1},{2},{0,1},{1,2},{0,1,2}
  CHECK(connected_subsets(make_path(3)) ==
        std::vector<VertexSet>{1, 2, 4, 3, 6, 7});
}

TEST_CASE("star subset count is rays + 2^rays") {
  for (int n = 0; n <= 5; ++n) {
    Graph s = make_star(n);
    auto subsets = connected_subsets(s);
    CHECK(subsets.size() == static_cast<std::size_t>(n) + (1ull << n));
    CHECK(subsets == test::brute_connected_subsets(s));
  }
}

TEST_CASE("edgeless graphs have only singleton subsets") {
  for (int m = 1; m <= 6; ++m) {
    Graph g(m);
    auto subsets = connected_subsets(g);
    CHECK(subsets.size() == static_cast<std::size_t>(m));
    for (VertexSet s : subsets) CHECK(popcount(s) == 1);
  }
  CHECK(connected_subsets(make_complete(0)).empty());
}

TEST_CASE("subset enumeration matches the power-set filter exhaustively") {
  for (int m = 0; m <= 6; ++m) {
    test::for_each_labeled_graph(m, [&](const Graph& g) {
      CHECK(connected_subsets(g) == test::brute_connected_subsets(g));
    });
  }
}

TEST_CASE("subset cap") {
  CHECK_NOTHROW(connected_subsets(make_path(3), 6));
  CHECK_THROWS_AS(connected_subsets(make_path(3), 5), CapExceededError);
}

TEST_CASE("class table of a path") {
  SubgraphClassTable table = classify_connected_subgraphs(make_path(3));
  REQUIRE(table.classes.size() == 3);
  CHECK(table.total_subsets == 6);
  CHECK(std::is_sorted(table.classes.begin(), table.classes.end(),
                       [](const SubgraphClass& a, const SubgraphClass& b) {
                         return a.code < b.code;
                       }));
  for (const SubgraphClass& cls : table.classes) {
    if (cls.representative.order() == 1) {
      CHECK(cls.multiplicity == 3);
      CHECK(cls.aut == 1);
    } else if (cls.representative.order() == 2) {
      CHECK(cls.multiplicity == 2);
      CHECK(cls.aut == 2);
    } else {
      CHECK(cls.representative.order() == 3);
      CHECK(cls.multiplicity == 1);
      CHECK(cls.aut == 2);
    }
  }
}

TEST_CASE("class table of a triangle and a vertex") {
  SubgraphClassTable table = classify_connected_subgraphs(make_complete(3));
  REQUIRE(table.classes.size() == 3);
  for (const SubgraphClass& cls : table.classes) {
    CHECK(cls.multiplicity == (cls.representative.order() == 3 ? 1 : 3));
    CHECK(cls.aut == factorial(cls.representative.order()));
  }

  SubgraphClassTable single = classify_connected_subgraphs(make_complete(1));
  REQUIRE(single.classes.size() == 1);
  CHECK(single.classes[0].multiplicity == 1);
  CHECK(single.classes[0].aut == 1);
}

TEST_CASE("class table invariants on random hosts") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 25; ++i) {
    Graph g = test::random_graph(rng, 7);
    SubgraphClassTable table = classify_connected_subgraphs(g);
    CHECK(table.total_subsets == test::brute_connected_subsets(g).size());
    std::set<CanonicalCode> codes;
    std::uint64_t mult_sum = 0;
    for (const SubgraphClass& cls : table.classes) {
      CHECK(is_connected(cls.representative));
      CHECK(codes.insert(cls.code).second);  // pairwise distinct
      CHECK(canonical_code(cls.representative) == cls.code);
      mult_sum += cls.multiplicity;
    }
    CHECK(mult_sum == table.total_subsets);
  }
}

TEST_CASE("parallel classification merges to the serial table") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    Graph g = random_connected_graph(rng, 8);
    SubgraphClassTable serial = classify_connected_subgraphs(g);
    SubgraphClassTable parallel =
        classify_connected_subgraphs(g, no_subset_cap, 3);
    REQUIRE(serial.classes.size() == parallel.classes.size());
    CHECK(serial.total_subsets == parallel.total_subsets);
    for (std::size_t c = 0; c < serial.classes.size(); ++c) {
      CHECK(serial.classes[c].code == parallel.classes[c].code);
      CHECK(serial.classes[c].multiplicity == parallel.classes[c].multiplicity);
      CHECK(serial.classes[c].aut == parallel.classes[c].aut);
      CHECK(serial.classes[c].representative ==
            parallel.classes[c].representative);
    }
  }
}

TEST_CASE("connected graphs of tiny sizes") {
  auto size0 = connected_graphs_of_size(0);
  REQUIRE(size0.size() == 1);
  CHECK(size0[0] == make_complete(1));

  auto size1 = connected_graphs_of_size(1);
  REQUIRE(size1.size() == 1);
  CHECK(count_isomorphisms(size1[0], make_complete(2)) > 0);

  auto size2 = connected_graphs_of_size(2);
  REQUIRE(size2.size() == 1);
  CHECK(count_isomorphisms(size2[0], make_path(3)) > 0);

  auto size3 = connected_graphs_of_size(3);
  REQUIRE(size3.size() == 3);
  int hits = 0;
  for (const Graph& g : size3) {
    hits += count_isomorphisms(g, make_path(4)) > 0;
    hits += count_isomorphisms(g, make_star(3)) > 0;
    hits += count_isomorphisms(g, make_cycle(3)) > 0;
  }
  CHECK(hits == 3);

  CHECK(connected_graphs_of_size(4).size() == 5);
  CHECK_THROWS_AS(connected_graphs_of_size(max_size_parameter + 1),
                  std::domain_error);
  CHECK_THROWS_AS(connected_graphs_of_size(-1), std::domain_error);
}

TEST_CASE("size enumeration is exhaustive and duplicate free") {
  for (int n = 0; n <= 5; ++n) {
    auto reps = connected_graphs_of_size(n);
    for (const Graph& g : reps) {
      CHECK(g.size() == n);
      CHECK(is_connected(g));
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        CHECK(count_isomorphisms(reps[i], reps[j]) == 0);

    // membership against raw edge-subset enumeration
    for (int m = 1; m <= n + 1; ++m) {
      test::for_each_labeled_graph(m, [&](const Graph& g) {
        if (g.size() != n || !is_connected(g)) return;
        int matches = 0;
        for (const Graph& rep : reps)
          matches += count_isomorphisms(g, rep) > 0;
        CHECK(matches == 1);
      });
    }
  }
}

TEST_CASE("maximal-order members are trees") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : connected_graphs_of_size(n))
      if (g.order() == n + 1) CHECK(test::is_acyclic(g));
}

TEST_CASE("graphs_of_order counts") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156};
  for (int m = 1; m <= 6; ++m)
    CHECK(graphs_of_order(m).size() == expected[m - 1]);
  CHECK_THROWS_AS(graphs_of_order(7), std::domain_error);
  CHECK_THROWS_AS(graphs_of_order(0), std::domain_error);
}

TEST_CASE("graphs_of_order matches brute clustering at order 4") {
  auto reps = graphs_of_order(4);
  std::vector<Graph> brute_reps;
  test::for_each_labeled_graph(4, [&](const Graph& g) {
    for (const Graph& rep : brute_reps)
      if (test::brute_count_isomorphisms(g, rep) > 0) return;
    brute_reps.push_back(g);
  });
  REQUIRE(reps.size() == brute_reps.size());
  for (const Graph& rep : brute_reps) {
    int matches = 0;
    for (const Graph& r : reps) matches += count_isomorphisms(rep, r) > 0;
    CHECK(matches == 1);
  }
}
