#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "prodstab/aut.hpp"
#include "prodstab/enumerate.hpp"
#include "prodstab/errors.hpp"
#include "prodstab/graph.hpp"
#include "prodstab/perm_group.hpp"

using namespace prodstab;

TEST_CASE("composition follows the right-action convention") {
  Permutation rot({1, 2, 0});
  CHECK(compose(rot, Permutation::identity(3)) == rot);
  Permutation swap_items({1, 0});
  CHECK(compose(swap_items, swap_items).is_identity());
  // rotation by one of a 5-cycle squared is rotation by two
  Permutation r1({1, 2, 3, 4, 0});
  Permutation r2({2, 3, 4, 0, 1});
  CHECK(compose(r1, r1) == r2);
  // v^(pq) = (v^p)^q
  Permutation p({1, 0, 2}), q({0, 2, 1});
  for (int v = 0; v < 3; ++v) CHECK(compose(p, q)(v) == q(p(v)));
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  Permutation p({3, 0, 1, 2});
  CHECK(p.to_string() == "[3,0,1,2]");
  CHECK(p.order() == 4);
  CHECK(compose(p, p.inverse()).is_identity());
}

TEST_CASE("chain order matches the exhaustive closure") {
  // dihedral on 6 points
  Permutation rot({1, 2, 3, 4, 5, 0});
  Permutation refl({0, 5, 4, 3, 2, 1});
  PermGroup d6 = PermGroup::from_generators(6, {rot, refl});
  CHECK(d6.order() == 12);
  CHECK(d6.order() == oracles::closure_order(6, {rot, refl}));

  // symmetric group from a transposition and a full cycle
  Permutation t({1, 0, 2, 3});
  Permutation c({1, 2, 3, 0});
  PermGroup s4 = PermGroup::from_generators(4, {t, c});
  CHECK(s4.order() == 24);

  // cyclic of prime order
  Permutation r5({1, 2, 3, 4, 0});
  CHECK(PermGroup::from_generators(5, {r5}).order() == 5);

  PermGroup trivial = PermGroup::from_generators(4, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(Permutation::identity(4)));
}

TEST_CASE("automorphism chain order equals the brute filter count") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      PermGroup aut = automorphism_group(g);
      CHECK(aut.order() == oracles::brute_automorphisms(g).size());
    }
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_graphs(n, {.loops = true})) {
      PermGroup aut = automorphism_group(g);
      CHECK(aut.order() == oracles::brute_automorphisms(g).size());
    }
}

TEST_CASE("membership agrees with the brute element list") {
  Graph g = cycle(6);
  PermGroup aut = automorphism_group(g);
  auto brute = oracles::brute_automorphisms(g);
  std::set<std::vector<int>> in_group;
  for (const auto& p : brute) in_group.insert(p.images());
  for (const auto& p : oracles::all_perms(6))
    CHECK(aut.contains(p) == bool(in_group.count(p.images())));
}

TEST_CASE("element streaming") {
  CHECK(automorphism_group(complete(3)).elements(100).size() == 6);
  Graph two_c6 = disjoint_union(cycle(6), cycle(6));
  auto elems = automorphism_group(two_c6).elements(1000);
  CHECK(elems.size() == 288);
  std::set<std::vector<int>> uniq;
  for (const auto& p : elems) uniq.insert(p.images());
  CHECK(uniq.size() == 288);  // each element exactly once
  CHECK_THROWS_AS(automorphism_group(complete(7)).elements(100), CapExceeded);
}

TEST_CASE("setwise stabilizer") {
  PermGroup aut = automorphism_group(cycle(6));
  PermGroup evens = aut.setwise_stabilizer({0, 2, 4});

  // oracle: filter the full element list
  unsigned long long expected = 0;
  aut.for_each_element([&](const Permutation& p) {
    bool keeps = true;
    for (int v : {0, 2, 4})
      if (p(v) % 2 != 0) keeps = false;
    expected += keeps;
    return true;
  });
  CHECK(evens.order() == expected);
  CHECK(evens.order() == 6);
  for (const auto& p : evens.generators())
    for (int v : {0, 2, 4}) CHECK(p(v) % 2 == 0);

  CHECK(aut.setwise_stabilizer({0, 1, 2, 3, 4, 5}).order() == aut.order());
  CHECK(aut.setwise_stabilizer({}).order() == aut.order());
}

TEST_CASE("group order overflow is refused") {
  // Sym(21) from generators; 21! does not fit in 64 bits
  std::vector<int> t(21), c(21);
  for (int i = 0; i < 21; ++i) {
    t[i] = i;
    c[i] = (i + 1) % 21;
  }
  std::swap(t[0], t[1]);
  PermGroup s21 =
      PermGroup::from_generators(21, {Permutation(t), Permutation(c)});
  CHECK_THROWS_AS(s21.order(), CapExceeded);
}
