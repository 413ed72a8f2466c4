#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "prodstab/aut.hpp"
#include "prodstab/enumerate.hpp"
#include "prodstab/errors.hpp"
#include "prodstab/graph.hpp"
#include "prodstab/graph_io.hpp"
#include "prodstab/products.hpp"

using namespace prodstab;

TEST_CASE("cycle family") {
  Graph c3 = cycle(3);
  CHECK(c3.order() == 3);
  CHECK(c3.edge_count() == 3);
  Graph c4 = cycle(4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  auto parts = is_bipartite(cycle(6));
  REQUIRE(parts);
  CHECK(parts->part_u == std::vector<int>{0, 2, 4});
  CHECK(parts->part_w == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("complete family") {
  CHECK(complete(2).edge_count() == 1);
  CHECK(complete(2).adjacent(0, 1));
  CHECK(complete(4).edge_count() == 6);
  Graph k1 = complete(1);
  CHECK(k1.order() == 1);
  CHECK_FALSE(k1.has_loop(0));
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("circulant family") {
  Graph g = circulant(8, {1, 2, 6, 7});
  CHECK(g.order() == 8);
  for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 4);
  CHECK(is_connected(g));
  CHECK_FALSE(is_bipartite(g));
  CHECK(is_twin_free(g));
  CHECK(neighbors(g, 0) == std::vector<int>{1, 2, 6, 7});

  // the constructor closes the connection set under negation
  CHECK(circulant(8, {1, 2}) == g);
  CHECK(are_isomorphic(circulant(6, {1, 5}), cycle(6)));
  CHECK(are_isomorphic(circulant(5, {1, 2, 3, 4}), complete(5)));
  CHECK_THROWS_AS(circulant(6, {0}), std::invalid_argument);
  CHECK_THROWS_AS(circulant(6, {6}), std::invalid_argument);
}

TEST_CASE("circulants are vertex-transitive") {
  Graph g = circulant(7, {1, 2});
  PermGroup aut = automorphism_group(g);
  for (int r = 0; r < 7; ++r) {
    std::vector<int> img(7);
    for (int v = 0; v < 7; ++v) img[v] = (v + r) % 7;
    CHECK(aut.contains(Permutation(img)));
  }
}

TEST_CASE("neighbors and loops") {
  Graph c5 = cycle(5);
  CHECK(neighbors(c5, 0) == std::vector<int>{1, 4});
  Graph loop(1);
  loop.add_edge(0, 0);
  CHECK(neighbors(loop, 0) == std::vector<int>{0});
  CHECK(loop.degree(0) == 1);
  CHECK_THROWS_AS(neighbors(c5, 5), std::invalid_argument);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(cycle(7)));
  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK_FALSE(is_connected(two_edges));
  CHECK_FALSE(is_connected(Graph(0)));
  CHECK(is_connected(direct_product(cycle(3), complete(2)).graph));
}

TEST_CASE("bipartite test") {
  CHECK_FALSE(is_bipartite(cycle(5)));
  Graph loop = cycle(4);
  loop.add_edge(1, 1);
  CHECK_FALSE(is_bipartite(loop));
  auto parts = is_bipartite(complete(2));
  REQUIRE(parts);
  CHECK(parts->part_u == std::vector<int>{0});
}

TEST_CASE("twin-free test") {
  CHECK_FALSE(is_twin_free(cycle(4)));
  CHECK(is_twin_free(cycle(5)));
  CHECK(is_twin_free(complete(2)));
  CHECK(is_twin_free(complete(1)));  // no pair of vertices at all
  Graph k2loops(2);
  k2loops.add_edge(0, 1);
  k2loops.add_edge(0, 0);
  k2loops.add_edge(1, 1);
  CHECK_FALSE(is_twin_free(k2loops));  // loops make both rows {0,1}
}

TEST_CASE("edge list round trip") {
  Graph c3 = parse_graph("3 3\n0 1\n1 2\n2 0\n");
  CHECK(c3 == cycle(3));
  Graph k1loop = parse_graph("1 1\n0 0\n");
  CHECK(k1loop.has_loop(0));
  CHECK(parse_graph(emit_edge_list(c3)) == c3);
  CHECK(parse_graph(emit_edge_list(k1loop)) == k1loop);

  CHECK_THROWS_AS(parse_edge_list("3\n"), GraphFormatError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), GraphFormatError);
  CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), GraphFormatError);
}

namespace {

// Independent encoder written straight off the format description: emit the
// upper-triangle bits column by column, six bits per printable byte.
std::string reference_graph6(const Graph& g) {
  std::string bits;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  std::string out(1, char(63 + g.order()));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + (bits[k + b] == '1');
    out += char(63 + v);
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 agrees with an independent reference on 100 graphs") {
  int checked = 0;
  for (const auto& g : enumerate_graphs(6)) {
    if (checked >= 100) break;
    std::string mine = emit_graph6(g);
    CHECK(mine == reference_graph6(g));
    CHECK(parse_graph6(mine) == g);
    CHECK(parse_graph(mine) == g);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("graph6 rejects loops and malformed input") {
  Graph loop(2);
  loop.add_edge(0, 0);
  CHECK_THROWS_AS(emit_graph6(loop), GraphFormatError);
  CHECK_THROWS_AS(parse_graph6("D"), GraphFormatError);    // truncated
  CHECK_THROWS_AS(parse_graph6("D??"), GraphFormatError);  // wrong length
  CHECK(parse_graph6(">>graph6<<DQc") == parse_graph6("DQc"));
}

TEST_CASE("adjacency stays symmetric across construction paths") {
  for (const auto& g : enumerate_graphs(4, {.loops = true})) {
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v)
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
}

TEST_CASE("induced subgraph and disjoint union") {
  Graph c6 = cycle(6);
  Graph evens = induced_subgraph(c6, {0, 2, 4});
  CHECK(evens.order() == 3);
  CHECK(evens.edge_count() == 0);
  Graph u = disjoint_union(cycle(3), cycle(3));
  CHECK(u.order() == 6);
  CHECK(u.edge_count() == 6);
  CHECK(connected_components(u).size() == 2);
}
