#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "ueq/generators.hpp"

using namespace ueq;

namespace {

EquivRel rel(int n, const std::vector<std::vector<int>>& blocks) {
  return EquivRel::from_blocks(Carrier(n), blocks);
}

UeqClass cls(int n, std::vector<EquivRel> gens) {
  return UeqClass::generate(Carrier(n), std::move(gens));
}

UeqClass discrete(int n) {
  return UeqClass::generate(Carrier(n), oracle::all_relations(n));
}

UeqClass indiscrete(int n) { return cls(n, {EquivRel::full(Carrier(n))}); }

std::vector<int> identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("SpaceMap validates totality and range") {
  UeqClass a = indiscrete(2), b = indiscrete(3);
  CHECK_NOTHROW(SpaceMap(a, b, {0, 2}));
  CHECK_THROWS_AS(SpaceMap(a, b, {0}), Error);
  CHECK_THROWS_AS(SpaceMap(a, b, {0, 3}), Error);
}

TEST_CASE("continuity is pullback membership") {
  UeqClass u = cls(2, {EquivRel::delta(Carrier(2))});
  CHECK(is_continuous(SpaceMap(u, u, identity(2))));
  CHECK(is_continuous(SpaceMap(indiscrete(2), indiscrete(2), {0, 0})));
  // Pullback of the diagonal is the diagonal, which the indiscrete class
  // lacks.
  CHECK_FALSE(is_continuous(SpaceMap(indiscrete(2), u, identity(2))));
}

TEST_CASE("openness quantifier") {
  CHECK(is_open_map(SpaceMap(indiscrete(3), discrete(2), {0, 1, 0})));
  UeqClass shared = cls(4, {rel(4, {{0, 1}, {2, 3}})});
  CHECK(is_open_map(SpaceMap(shared, shared, identity(4))));
  CHECK_FALSE(is_open_map(
      SpaceMap(cls(2, {EquivRel::delta(Carrier(2))}), indiscrete(2), {0, 0})));
}

TEST_CASE("u-surjections") {
  CHECK(is_u_surjection(SpaceMap(indiscrete(2), cls(2, {EquivRel::delta(Carrier(2))}), {1, 0})));
  CHECK(is_u_surjection(SpaceMap(indiscrete(2), indiscrete(3), {0, 0})));
  CHECK_FALSE(
      is_u_surjection(SpaceMap(indiscrete(2), cls(3, {EquivRel::delta(Carrier(3))}), {0, 0})));
}

TEST_CASE("u-equivalences need continuous inverses") {
  UeqClass u = cls(3, {rel(3, {{0, 1}, {2}})});
  CHECK(is_u_equivalence(SpaceMap(u, u, identity(3))));
  CHECK_FALSE(is_u_equivalence(SpaceMap(discrete(2), indiscrete(2), identity(2))));
  CHECK_FALSE(is_u_equivalence(SpaceMap(indiscrete(2), indiscrete(2), {0, 0})));
}

TEST_CASE("embedding examples") {
  // Inclusion into a space, carrying the relative class.
  UeqClass big = cls(4, {rel(4, {{0, 1}, {2, 3}}), EquivRel::full(Carrier(4))});
  RelativeSpace sub = relative(big, ElemSet::of(4, {0, 2}));
  CHECK(is_u_embedding(SpaceMap(sub.cls, big, sub.inclusion)));

  // Identity from the discrete to the indiscrete class: continuous injection
  // but not an embedding once there are two points.
  CHECK_FALSE(is_u_embedding(SpaceMap(discrete(2), indiscrete(2), identity(2))));

  // A bijection whose source class is exactly the pullback.
  UeqClass v = cls(3, {rel(3, {{0, 2}, {1}})});
  std::vector<int> f{2, 0, 1};
  UeqClass pulled = induced_class(Carrier(3), {MapInto{f, v}});
  CHECK(is_u_embedding(SpaceMap(pulled, v, f)));
}

TEST_CASE("embedding characterizations agree on random maps") {
  Rng rng(59);
  int embeddings = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.range(1, 5), m = rng.range(1, 5);
    UeqClass v = random_class(rng, Carrier(m), 4);
    std::vector<int> f = (n <= m && rng.chance(1, 2)) ? random_injection(rng, n, m)
                                                      : random_function(rng, n, m);
    UeqClass u = rng.chance(1, 3) ? induced_class(Carrier(n), {MapInto{f, v}})
                                  : random_class(rng, Carrier(n), 4);
    SpaceMap map(u, v, f);
    bool a = embedding_definitional(map);
    bool b = embedding_characterization(map);
    CHECK(a == b);
    CHECK(is_u_embedding(map) == a);
    if (a) ++embeddings;
  }
  CHECK(embeddings > 0);  // both branches exercised
}

TEST_CASE("left inverse check") {
  UeqClass u = cls(2, {EquivRel::delta(Carrier(2))});
  CHECK(left_inverse_embedding_check(SpaceMap(u, u, identity(2)), SpaceMap(u, u, identity(2))));

  // Inclusion with a retraction on a three-point space.
  UeqClass v = cls(3, {rel(3, {{0, 1}, {2}})});
  UeqClass a = induced_class(Carrier(2), {MapInto{{0, 2}, v}});
  SpaceMap incl(a, v, {0, 2});
  SpaceMap retr(v, a, {0, 0, 1});
  CHECK(left_inverse_embedding_check(incl, retr));

  SpaceMap not_inverse(v, a, {1, 1, 0});
  CHECK_THROWS_AS(left_inverse_embedding_check(incl, not_inverse), Error);
  try {
    left_inverse_embedding_check(incl, not_inverse);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLeftInverse);
  }
}

TEST_CASE("transversality") {
  UeqClass sep = cls(2, {EquivRel::delta(Carrier(2))});
  UeqClass ind = indiscrete(2);
  UeqClass z = indiscrete(2);
  CHECK(is_transverse(SpaceMap(ind, z, {0, 1})));  // injective
  CHECK(is_transverse(SpaceMap(sep, z, {0, 0})));  // constant, separated source
  CHECK_FALSE(is_transverse(SpaceMap(ind, z, {0, 0})));
}

TEST_CASE("coincidence sets") {
  UeqClass u3 = indiscrete(3);
  SpaceMap alpha(u3, u3, {0, 1, 0});
  SpaceMap beta(u3, u3, {0, 0, 0});
  CHECK(coincidence_set(alpha, alpha) == ElemSet::full_set(3));
  CHECK(coincidence_set(alpha, beta) == ElemSet::of(3, {0, 2}));
  SpaceMap gamma(u3, u3, {1, 2, 1});
  CHECK(coincidence_set(beta, gamma) == ElemSet(3));
  CHECK_THROWS_AS(coincidence_set(alpha, SpaceMap(indiscrete(2), u3, {0, 0})), Error);
}

TEST_CASE("u-open subsets") {
  UeqClass whole = cls(3, {rel(3, {{0, 1}, {2}})});
  CHECK(is_u_open_subset(whole, ElemSet::full_set(3)));

  UeqClass rich = cls(4, {EquivRel::full(Carrier(4)), rel(4, {{0, 1}, {2, 3}})});
  CHECK(is_u_open_subset(rich, ElemSet::of(4, {0, 1})));
  CHECK_FALSE(is_u_open_subset(indiscrete(4), ElemSet::of(4, {0, 1})));
  CHECK_THROWS_AS(is_u_open_subset(rich, ElemSet(4)), Error);
}

TEST_CASE("the three openness forms agree on rich spaces") {
  Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.range(1, 6);
    UeqClass space = random_rich_class(rng, Carrier(n), 4);
    ElemSet a = random_subset(rng, Carrier(n), true);
    bool inc = subset_open_by_inclusion(space, a);
    bool ref = subset_open_by_refinement(space, a);
    bool inner = subset_open_by_inner_relation(space, a);
    CHECK(inc == ref);
    CHECK(ref == inner);
  }
}

TEST_CASE("continuity into products is coordinatewise") {
  Rng rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    int k = rng.range(1, 3);
    std::vector<UeqClass> factors;
    for (int i = 0; i < k; ++i) factors.push_back(random_class(rng, Carrier(rng.range(1, 3)), 2));
    ProductSpace prod = product_class(factors);
    int n = rng.range(1, 5);
    std::vector<int> phi = random_function(rng, n, prod.cls.size());
    UeqClass a = rng.chance(1, 2) ? induced_class(Carrier(n), {MapInto{phi, prod.cls}})
                                  : random_class(rng, Carrier(n), 3);
    bool whole = is_continuous(SpaceMap(a, prod.cls, phi));
    bool each = true;
    for (int j = 0; j < k; ++j) {
      std::vector<int> comp(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        comp[static_cast<std::size_t>(x)] = prod.shape.coord(phi[static_cast<std::size_t>(x)], j);
      each = each && is_continuous(SpaceMap(a, factors[static_cast<std::size_t>(j)], comp));
    }
    CHECK(whole == each);
  }
}

TEST_CASE("surjection-like open maps from rich spaces are onto") {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    int nx = rng.range(1, 5);
    int ny = rng.range(1, 5);
    UeqClass u = random_rich_class(rng, Carrier(nx), 3);
    UeqClass v = random_class(rng, Carrier(ny), 3);
    SpaceMap f(u, v, random_function(rng, nx, ny));
    if (is_u_surjection(f) && is_open_map(f)) CHECK(f.is_surjective());
  }
}
