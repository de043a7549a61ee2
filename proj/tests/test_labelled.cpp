#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <vector>

#include "qtcatalan/labelled_graph.hpp"
#include "qtcatalan/labelled_tree.hpp"

using namespace qtcatalan;

namespace {

// spanning tree of the six-vertex example graph: edges 0-3, 0-4, 0-5, 5-2, 2-1
labelled_tree example_tree() { return labelled_tree::parse("2,5,0,0,0"); }

labelled_graph example_graph() {
  return labelled_graph::parse("6; 1-2,2-5,0-5,3-5,0-4,3-4,2-4,0-3");
}

}  // namespace

TEST_CASE("labelled tree text form and validation", "[labelled]") {
  CHECK(labelled_tree::parse("0,1").to_string() == "0,1");
  CHECK(labelled_tree::parse("").vertex_count() == 1);
  CHECK(example_tree().parent_of(1) == 2);
  CHECK(example_tree().parent_of(5) == 0);

  CHECK_THROWS_AS(labelled_tree::parse("3"), error);     // parent out of range
  CHECK_THROWS_AS(labelled_tree::parse("1,2,3"), error); // unreachable root
  CHECK_THROWS_AS(labelled_tree::parse("x"), error);
}

TEST_CASE("coinversions", "[labelled]") {
  CHECK(coinversions(labelled_tree::parse("0,0,0")) == 0);  // star at the root
  CHECK(coinversions(labelled_tree::parse("0,1")) == 1);    // chain 0-1-2
  CHECK(coinversions(labelled_tree::parse("2,0")) == 0);    // chain 0-2-1
}

TEST_CASE("vertex statistic d~", "[labelled]") {
  CHECK(d_tilde(labelled_tree::parse("0,0,0")) == std::vector<int>{0, 0, 1, 2});
  CHECK(d_tilde(labelled_tree::parse("0,1")) == std::vector<int>{0, 0, 0});
  CHECK(d_tilde(example_tree()) == std::vector<int>{0, 2, 2, 0, 1, 2});
}

TEST_CASE("addable edge sets", "[labelled]") {
  const labelled_tree t = example_tree();
  const std::set<std::pair<int, int>> expected{{1, 3}, {1, 4}, {2, 3}, {2, 4},
                                               {3, 5}, {4, 5}, {3, 4}};
  CHECK(addable_edges_all(t) == expected);
  CHECK(addable_edges(t, 0).empty());
  CHECK(addable_edges(t, 3).empty());
  CHECK(addable_edges(t, 4) == std::vector<std::pair<int, int>>{{3, 4}});

  // chain 0-1-2 has no siblings along any root path
  CHECK(addable_edges(labelled_tree::parse("0,1"), 2).empty());

  // the largest leaf of a star sees all smaller leaves
  CHECK(addable_edges(labelled_tree::parse("0,0,0"), 3).size() == 2);
}

TEST_CASE("labelled tree enumeration hits n^(n-2)", "[labelled]") {
  const std::vector<unsigned long long> expected{1, 1, 3, 16, 125, 1296};
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> seen;
    unsigned long long count = 0;
    for_each_labelled_tree(n, [&](const labelled_tree& t) {
      ++count;
      seen.insert(t.to_string());
      REQUIRE(t.vertex_count() == n);
    });
    REQUIRE(count == expected[static_cast<std::size_t>(n) - 1]);
    REQUIRE(seen.size() == count);
    REQUIRE(labelled_tree_count(n) == count);
  }
}

TEST_CASE("graph text form and basics", "[labelled]") {
  const labelled_graph g = labelled_graph::parse("3; 0-1,0-2");
  CHECK(g.to_string() == "3; 0-1,0-2");
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.is_connected());
  CHECK_FALSE(labelled_graph::parse("3; 0-1").is_connected());
  CHECK_THROWS_AS(labelled_graph::parse("3: 0-1"), error);
  CHECK_THROWS_AS(labelled_graph::parse("3; 0-3"), error);
}

TEST_CASE("connected graph enumeration", "[labelled]") {
  const std::vector<unsigned long long> expected{1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n) {
    unsigned long long count = 0;
    for_each_connected_graph(n, [&](const labelled_graph& g) {
      ++count;
      REQUIRE(g.is_connected());
    });
    REQUIRE(count == expected[static_cast<std::size_t>(n) - 1]);
  }
  CHECK_THROWS_MATCHES(for_each_connected_graph(8, [](const labelled_graph&) {}), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::unsupported_size; }));
}

TEST_CASE("spanning tree extraction", "[labelled]") {
  // triangle: both neighbours of 0 are visited from 0, edge 1-2 is never used
  labelled_graph triangle(3, 0);
  triangle.add_edge(0, 1);
  triangle.add_edge(0, 2);
  triangle.add_edge(1, 2);
  CHECK(spanning_tree_extract(triangle) == labelled_tree::parse("0,0"));

  CHECK(spanning_tree_extract(example_graph()) == example_tree());

  CHECK_THROWS_MATCHES(spanning_tree_extract(labelled_graph(3, 0)), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::not_connected; }));

  // trees are fixed points
  for (int n = 1; n <= 5; ++n) {
    for_each_labelled_tree(n, [&](const labelled_tree& t) {
      REQUIRE(spanning_tree_extract(labelled_graph::from_tree(t)) == t);
    });
  }

  // and the extraction always returns a spanning subtree
  for_each_connected_graph(5, [&](const labelled_graph& g) {
    const labelled_tree t = spanning_tree_extract(g);
    for (const auto& [a, b] : t.edges()) REQUIRE(g.has_edge(a, b));
  });
}
