#include <doctest.h>

#include "oracles.hpp"
#include "prodstab/aut.hpp"
#include "prodstab/enumerate.hpp"
#include "prodstab/errors.hpp"

using namespace prodstab;

TEST_CASE("small class counts match the brute-force canonicalizer") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(int(enumerate_graphs(n).size()) ==
          oracles::brute_class_count(n, {}));
    CHECK(int(enumerate_graphs(n, {.connected = true}).size()) ==
          oracles::brute_class_count(n, {.require_connected = true}));
  }
  for (int n = 1; n <= 4; ++n)
    CHECK(int(enumerate_graphs(n, {.loops = true}).size()) ==
          oracles::brute_class_count(n, {.loops = true}));
}

TEST_CASE("known connected counts") {
  CHECK(enumerate_graphs(3, {.connected = true}).size() == 2);  // P3, K3
  CHECK(enumerate_graphs(4, {.connected = true}).size() == 6);
  // A001349: 21, 112, 853 connected graphs on 5..7 vertices
  CHECK(enumerate_graphs(5, {.connected = true}).size() == 21);
  CHECK(enumerate_graphs(6, {.connected = true}).size() == 112);
  CHECK(enumerate_graphs(7, {.connected = true}).size() == 853);
  // A000088: all graphs on 7 vertices
  CHECK(enumerate_graphs(7).size() == 1044);
  // A000666: symmetric relations on 5 points
  CHECK(enumerate_graphs(5, {.loops = true}).size() == 544);
}

TEST_CASE("twin filter drops the known twin-ful order-4 graphs") {
  auto all = enumerate_graphs(4, {.connected = true});
  auto tf = enumerate_graphs(4, {.connected = true, .twin_free = true});
  CHECK(int(all.size()) - int(tf.size()) == 4);  // C4, K4, K13, diamond
  CHECK(int(tf.size()) ==
        oracles::brute_class_count(
            4, {.require_connected = true, .require_twin_free = true}));
  for (const auto& g : tf) {
    CHECK_FALSE(are_isomorphic(g, cycle(4)));
    CHECK_FALSE(are_isomorphic(g, complete(4)));
  }
}

TEST_CASE("representatives are pairwise non-isomorphic") {
  auto graphs = enumerate_graphs(5);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      CHECK_FALSE(are_isomorphic(graphs[i], graphs[j]));
  auto loopy = enumerate_graphs(4, {.loops = true});
  for (std::size_t i = 0; i < loopy.size(); ++i)
    for (std::size_t j = i + 1; j < loopy.size(); ++j)
      CHECK_FALSE(are_isomorphic(loopy[i], loopy[j]));
}

TEST_CASE("bipartite filter") {
  for (const auto& g : enumerate_graphs(5, {.bipartite = true}))
    CHECK(is_bipartite(g));
  // loopy graphs are never bipartite
  for (const auto& g :
       enumerate_graphs(4, {.loops = true, .bipartite = false}))
    CHECK_FALSE(is_bipartite(g));
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_graphs(8), CapExceeded);
  CHECK_THROWS_AS(enumerate_graphs(6, {.loops = true}), CapExceeded);
  CHECK_THROWS_AS(enumerate_graphs(0), std::invalid_argument);
}
