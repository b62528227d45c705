#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "quandlekit/cocycle.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

namespace {

Perm swap2() { return Perm({1, 0}); }

ConstantCocycle swap_cocycle() {
  CocycleTable t = {{Perm::identity(2), swap2()}, {Perm::identity(2), Perm::identity(2)}};
  return validate_constant(trivial_quandle(2), 2, t);
}

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return Perm(im);
}

}  // namespace

TEST_CASE("cocycle validation") {
  CHECK_NOTHROW(trivial_cocycle(dihedral_quandle(3), 3));
  CHECK_NOTHROW(swap_cocycle());
  CocycleTable diag = {{swap2(), Perm::identity(2)}, {Perm::identity(2), Perm::identity(2)}};
  try {
    validate_constant(trivial_quandle(2), 2, diag);
    FAIL("expected DiagonalViolation");
  } catch (DiagonalViolation const& e) {
    CHECK(e.x == 0);
  }
  // On R_3 a single nontrivial off-diagonal entry breaks the cocycle law.
  Quandle r3 = dihedral_quandle(3);
  CocycleTable bad(3, std::vector<Perm>(3, Perm::identity(2)));
  bad[0][1] = swap2();
  CHECK_THROWS_AS(validate_constant(r3, 2, bad), CocycleViolation);
  CHECK_THROWS_AS(validate_constant(r3, 2, CocycleTable(2)), std::invalid_argument);
}

TEST_CASE("extensions") {
  Quandle r3 = dihedral_quandle(3);
  Quandle e = extend(trivial_cocycle(r3, 2));
  CHECK(e.order() == 6);
  std::vector<int> proj(6);
  for (int i = 0; i < 6; ++i) proj[static_cast<std::size_t>(i)] = i / 2;
  CHECK_NOTHROW(QuandleMap(e, r3, proj));

  Quandle e2 = extend(swap_cocycle());
  CHECK(e2.order() == 4);
  CHECK(inn(e2).order() == 2);
}

TEST_CASE("cohomologous cocycles") {
  auto alpha = swap_cocycle();
  auto self = are_cohomologous(alpha, alpha);
  REQUIRE(self.has_value());
  for (auto const& p : *self) CHECK(p.is_identity());
  CHECK_FALSE(are_cohomologous(alpha, trivial_cocycle(trivial_quandle(2), 2)).has_value());
}

TEST_CASE("transport gives isomorphic extensions through the fiberwise map") {
  std::mt19937_64 rng(5);
  std::vector<Quandle> bases = {trivial_quandle(2), dihedral_quandle(3), trivial_quandle(3)};
  for (auto const& base : bases) {
    for (std::size_t s = 1; s <= 3; ++s) {
      auto all = enumerate_constant_cocycles(base, s);
      REQUIRE_FALSE(all.empty());
      for (int trial = 0; trial < 10; ++trial) {
        auto const& alpha = all[rng() % all.size()];
        LambdaMap lambda;
        for (std::size_t x = 0; x < base.order(); ++x) lambda.push_back(random_perm(s, rng));
        ConstantCocycle beta = transport(alpha, lambda);
        Perm f = fiberwise_map(lambda, s);
        CHECK(is_homomorphism(extend(alpha), extend(beta), f.images()));
        auto w = are_cohomologous(alpha, beta);
        REQUIRE(w.has_value());
        CHECK(transport(alpha, *w) == beta);
      }
    }
  }
}

TEST_CASE("cocycle enumeration is exhaustive on tiny cases") {
  // Over trivial(n) entries sharing a row must commute; with n = 2 each row
  // has one free entry.
  CHECK(enumerate_constant_cocycles(trivial_quandle(2), 2).size() == 4);
  CHECK(enumerate_constant_cocycles(trivial_quandle(2), 3).size() == 36);
  // n = 3: per row, the ordered commuting pairs in Sigma_3 number 18.
  CHECK(enumerate_constant_cocycles(trivial_quandle(3), 3).size() == 18 * 18 * 18);
  Caps tight;
  tight.elements = 10;
  CHECK_THROWS_AS(enumerate_constant_cocycles(dihedral_quandle(3), 3, tight), CapExceeded);
}

TEST_CASE("the action on cocycles and its stabilizer") {
  auto alpha = swap_cocycle();
  CHECK(act(Perm::identity(2), Perm::identity(2), alpha) == alpha);
  CHECK(act(Perm::identity(2), swap2(), alpha) == alpha);
  CHECK_THROWS_AS(act(Perm({1, 0, 2, 3}), Perm::identity(2), trivial_cocycle(dihedral_quandle(4), 2)),
                  NotAutomorphism);

  auto triv = trivial_cocycle(dihedral_quandle(3), 2);
  CHECK(cocycle_stabilizer(triv).order() == aut_times_symmetric(dihedral_quandle(3), 2).order());

  // Only pairs with phi = id fix alpha: (id, id) and (id, swap).
  PermGroup stab = cocycle_stabilizer(alpha);
  std::size_t filtered = 0;
  for (auto const& pair : aut_times_symmetric(trivial_quandle(2), 2).elements()) {
    auto [phi, theta] = split_pair(pair, 2);
    filtered += act(phi, theta, alpha) == alpha ? 1 : 0;
  }
  CHECK(stab.order() == filtered);
  CHECK(stab.order() == 2);
}

TEST_CASE("embedding of the stabilizer") {
  auto alpha = swap_cocycle();
  CHECK(embed(Perm::identity(2), Perm::identity(2), alpha).is_identity());
  CHECK_THROWS_AS(embed(swap2(), Perm::identity(2), alpha), NotInStabilizer);

  Quandle r3 = dihedral_quandle(3);
  for (auto const& a : enumerate_constant_cocycles(r3, 2)) {
    Quandle e = extend(a);
    for (auto const& pair : cocycle_stabilizer(a).elements()) {
      auto [phi, theta] = split_pair(pair, 3);
      CHECK(is_automorphism(e, embed(phi, theta, a)));
      CHECK(pair_perm(phi, theta) == pair);
    }
  }
}

TEST_CASE("abelian cocycles") {
  AbelianCocycle zero{dihedral_quandle(3), {{3}},
                      std::vector<std::vector<std::vector<int>>>(3, std::vector<std::vector<int>>(3, {0}))};
  CHECK_NOTHROW(validate_abelian(zero));
  ConstantCocycle c = abelian_to_constant(zero);
  for (auto const& row : c.table()) {
    for (auto const& p : row) CHECK(p.is_identity());
  }

  AbelianCocycle diag = zero;
  diag.table[1][1] = {1};
  CHECK_THROWS_AS(validate_abelian(diag), DiagonalViolation);

  for (auto const& g : compute_h2(dihedral_quandle(4), {2}).generators) {
    CHECK(extend(abelian_to_constant(g)) == abelian_extension(g));
  }
}

TEST_CASE("H2 of small quandles") {
  auto trivial1 = compute_h2(trivial_quandle(1), {5});
  CHECK(trivial1.order == 1);
  CHECK(trivial1.invariant_factors.empty());

  auto h = compute_h2(trivial_quandle(2), {2});
  CHECK(h.order == 4);
  CHECK(h.invariant_factors == std::vector<std::int64_t>{2, 2});
  CHECK(h.cocycle_count == 4);
  CHECK(h.coboundary_count == 1);

  auto mixed = compute_h2(trivial_quandle(2), {2, 3});
  CHECK(mixed.order == 36);
  CHECK(mixed.invariant_factors == std::vector<std::int64_t>{6, 6});

  Caps tight;
  tight.quandle_order = 2;
  CHECK_THROWS_AS(compute_h2(dihedral_quandle(3), {2}, tight), CapExceeded);
}

TEST_CASE("H2 agrees with a brute-force oracle") {
  struct Case {
    Quandle q;
    int m;
  };
  std::vector<Case> cases = {{trivial_quandle(2), 2}, {trivial_quandle(2), 3},
                             {trivial_quandle(3), 2}, {dihedral_quandle(3), 2},
                             {dihedral_quandle(3), 3}, {dihedral_quandle(4), 2},
                             {Quandle::from_table({{0, 2, 0}, {1, 1, 1}, {2, 0, 2}}), 2},
                             {Quandle::from_table({{0, 2, 0}, {1, 1, 1}, {2, 0, 2}}), 4}};
  for (auto const& c : cases) {
    auto ours = compute_h2(c.q, {c.m});
    auto ref = oracle::brute_force_h2(c.q, c.m);
    CHECK(ours.cocycle_count == ref.cocycles);
    CHECK(ours.coboundary_count == ref.coboundaries);
    CHECK(ours.order == ref.order());
    CHECK(oracle::killed_counts(ours.invariant_factors) == ref.killed);
    REQUIRE(ours.generators.size() == ours.cyclic_orders.size());
    for (auto const& g : ours.generators) CHECK_NOTHROW(validate_abelian(g));
  }
}
