#include <numeric>
#include <random>

#include "doctest.h"
#include "quandlekit/fingroup.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return Perm(im);
}

std::vector<Quandle> corpus() {
  return {trivial_quandle(3), dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(5),
          dihedral_quandle(6), conj_quandle(symmetric_group(3)),
          core_quandle(symmetric_group(3)), conj_quandle(quaternion_group())};
}

// Aut(Q) by filtering every bijection.
std::size_t naive_aut_order(Quandle const& q) {
  std::vector<int> im(q.order());
  std::iota(im.begin(), im.end(), 0);
  std::size_t count = 0;
  do {
    count += is_automorphism(q, Perm(im)) ? 1 : 0;
  } while (std::next_permutation(im.begin(), im.end()));
  return count;
}

}  // namespace

TEST_CASE("axiom validation with witnesses") {
  CHECK_NOTHROW(Quandle::from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));
  CHECK_NOTHROW(Quandle::from_table({{0, 2, 0}, {1, 1, 1}, {2, 0, 2}}));
  try {
    Quandle::from_table({{1, 0}, {0, 1}});
    FAIL("expected Axiom1Violation");
  } catch (Axiom1Violation const& e) {
    CHECK(e.x == 0);
  }
  try {
    Quandle::from_table({{0, 1}, {0, 0}});
    FAIL("expected Axiom1Violation");
  } catch (Axiom1Violation const& e) {
    CHECK(e.x == 1);
  }
  try {
    Quandle::from_table({{0, 0, 0}, {0, 1, 1}, {2, 2, 2}});
    FAIL("expected Axiom2Violation");
  } catch (Axiom2Violation const& e) {
    CHECK(e.y == 0);
  }
  // R_3 plus a point acting by a 3-cycle: a rack axiom failure, not 1 or 2.
  CHECK_THROWS_AS(Quandle::from_table({{0, 2, 1, 1}, {2, 1, 0, 2}, {1, 0, 2, 0}, {3, 3, 3, 3}}),
                  Axiom3Violation);
  CHECK_THROWS_AS(Quandle::from_table({{0, 1}, {0}}), InvalidTable);
}

TEST_CASE("standard constructions") {
  Quandle t = trivial_quandle(3);
  for (auto const& row : t.rows()) CHECK(row[0] == row[1]);
  CHECK(dihedral_quandle(4).rows()
        == Table{{0, 2, 0, 2}, {3, 1, 3, 1}, {2, 0, 2, 0}, {1, 3, 1, 3}});
  Quandle r3 = dihedral_quandle(3);
  CHECK(r3.rows() == Table{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  CHECK(r3.right_translation(0) == Perm({0, 2, 1}));
}

TEST_CASE("center") {
  CHECK(center(trivial_quandle(4)).size() == 4);
  FiniteGroup s3 = symmetric_group(3);
  CHECK(center(conj_quandle(s3)) == std::vector<int>{s3.identity()});
  CHECK(center(dihedral_quandle(3)).empty());
}

TEST_CASE("inner generators and inner groups") {
  CHECK(inner_generators(trivial_quandle(4)).size() == 1);
  CHECK(inner_generators(dihedral_quandle(4)).size() == 2);
  CHECK(inner_generators(dihedral_quandle(5)).size() == 5);
  CHECK(inn(dihedral_quandle(4)).order() == 4);
  CHECK(inn(dihedral_quandle(5)).order() == 10);
  CHECK(inn(dihedral_quandle(6)).order() == 6);
  CHECK(inn(conj_quandle(symmetric_group(3))).order() == 6);
}

TEST_CASE("automorphism groups against a brute-force filter") {
  CHECK(aut(dihedral_quandle(4)).order() == 8);
  CHECK(aut(dihedral_quandle(5)).order() == 20);
  CHECK(aut(trivial_quandle(4)).order() == 24);
  for (auto const& q : corpus()) {
    CHECK(aut(q).order() == naive_aut_order(q));
  }
}

TEST_CASE("quasi-inner automorphisms") {
  CHECK(qinn(dihedral_quandle(5)).order() == 20);
  CHECK(qinn(dihedral_quandle(4)).elements() == inn(dihedral_quandle(4)).elements());
  Quandle r5 = dihedral_quandle(5);
  for (auto const& phi : aut(r5).elements()) {
    CHECK(is_quasi_inner_weak(r5, phi));
  }
  CHECK(is_quasi_inner_strong(r5, Perm::identity(5)));
}

TEST_CASE("invariant properties of Aut, Inn and QInn") {
  for (auto const& q : corpus()) {
    PermGroup a = aut(q), i = inn(q), qi = qinn(q);
    for (auto const& g : i.elements()) CHECK(qi.contains(g));
    for (auto const& g : qi.elements()) CHECK(a.contains(g));
    int const n = static_cast<int>(q.order());
    for (auto const& phi : a.elements()) {
      for (int x = 0; x < n; ++x) {
        CHECK(phi * q.right_translation(x) * phi.inverse() == q.right_translation(phi(x)));
      }
      for (auto const& g : i.generators()) CHECK(i.contains(phi * g * phi.inverse()));
      std::vector<int> image;
      for (int z : center(q)) image.push_back(phi(z));
      std::sort(image.begin(), image.end());
      CHECK(image == center(q));
    }
    if (is_connected(q)) CHECK(qi.order() == a.order());
  }
}

TEST_CASE("orbits and connectivity") {
  CHECK(is_connected(dihedral_quandle(5)));
  CHECK(orbit_partition(dihedral_quandle(6)).size() == 2);
  CHECK(orbit_partition(conj_quandle(symmetric_group(3))).size() == 3);
  for (std::size_t n = 3; n <= 8; ++n) CHECK(is_connected(dihedral_quandle(n)) == (n % 2 == 1));
}

TEST_CASE("k-transitivity of Aut and Inn") {
  CHECK(is_k_transitive_aut(dihedral_quandle(3), 3));
  CHECK(is_k_transitive_aut(trivial_quandle(4), 3));
  CHECK_FALSE(is_k_transitive_aut(dihedral_quandle(5), 3));
  CHECK(is_k_transitive_aut(dihedral_quandle(5), 2));
  CHECK_FALSE(is_k_transitive_inn(dihedral_quandle(5), 2));
}

TEST_CASE("involutory and trivial") {
  CHECK(is_involutory(core_quandle(symmetric_group(3))));
  CHECK(is_involutory(trivial_quandle(2)));
  CHECK_FALSE(is_involutory(conj_quandle(symmetric_group(3))));
  CHECK(is_trivial(trivial_quandle(3)));
  CHECK_FALSE(is_trivial(dihedral_quandle(3)));
}

TEST_CASE("isomorphism and invariants under relabeling") {
  CHECK_FALSE(is_isomorphic(dihedral_quandle(3), trivial_quandle(3)).has_value());
  CHECK(is_isomorphic(core_quandle(abelian_group({2, 2})), trivial_quandle(4)).has_value());
  std::mt19937_64 rng(11);
  for (auto const& q : corpus()) {
    Perm p = random_perm(q.order(), rng);
    Quandle r = relabel(q, p);
    auto w = is_isomorphic(q, r);
    REQUIRE(w.has_value());
    CHECK(is_homomorphism(q, r, *w));
    CHECK(center(r).size() == center(q).size());
    CHECK(aut(r).order() == aut(q).order());
    CHECK(inn(r).order() == inn(q).order());
    CHECK(canonical_form(r) == canonical_form(q));
  }
}

TEST_CASE("homomorphisms and subquandles") {
  Quandle r3 = dihedral_quandle(3);
  CHECK_NOTHROW(QuandleMap(r3, trivial_quandle(1), {0, 0, 0}));
  CHECK_THROWS_AS(QuandleMap(r3, trivial_quandle(2), {0, 0, 1}), NotAHomomorphism);
  CHECK(QuandleMap(r3, r3, {0, 2, 1}).is_bijective());

  Quandle r6 = dihedral_quandle(6);
  auto sub = subquandle(r6, {0, 2, 4});
  REQUIRE(sub.has_value());
  CHECK(is_isomorphic(*sub, r3).has_value());
  CHECK_FALSE(subquandle(r6, {0, 1}).has_value());
}

TEST_CASE("Coxeter reports") {
  auto z4 = coxeter_report({4});
  CHECK(z4.distinct_translations == 2);
  CHECK(z4.coxeter_m == 2);
  CHECK(z4.inn_order == 4);
  REQUIRE(z4.coxeter_order.has_value());
  CHECK(*z4.coxeter_order == 4);
  CHECK(z4.orders_match);

  auto z6 = coxeter_report({6});
  CHECK(z6.distinct_translations == 3);
  CHECK(z6.coxeter_m == 3);
  CHECK(z6.involutions_hold);
  CHECK(z6.braid_relations_hold);
  CHECK(z6.inn_order == 6);
  CHECK_FALSE(z6.coxeter_order.has_value());
  CHECK_FALSE(z6.orders_match);

  auto z24 = coxeter_report({2, 4});
  CHECK(z24.distinct_translations == 2);
  CHECK(z24.counts_agree);
  CHECK(z24.inn_order == 4);
  CHECK(z24.orders_match);

  CHECK_THROWS_AS(coxeter_report({3}), HypothesisViolated);
  CHECK(uniform_coxeter_order(2, 3) == 6);
  CHECK(uniform_coxeter_order(3, 2) == 8);
  CHECK_FALSE(uniform_coxeter_order(3, 3).has_value());
  CHECK_FALSE(uniform_coxeter_order(3, 4).has_value());
}

TEST_CASE("caps") {
  Caps tight;
  tight.quandle_order = 4;
  CHECK_THROWS_AS(aut(dihedral_quandle(5), tight), CapExceeded);
}
