#include <random>

#include "doctest.h"
#include "quandlekit/construct.hpp"
#include "quandlekit/fingroup.hpp"

using namespace quandlekit;

namespace {

std::vector<FiniteGroup> groups() {
  return {cyclic_group(3), abelian_group({2, 2}), symmetric_group(3), dihedral_group(4),
          quaternion_group()};
}

Table const kJoyce = {{0, 2, 0}, {1, 1, 1}, {2, 0, 2}};

}  // namespace

TEST_CASE("named compatible maps") {
  for (auto const& g : groups()) {
    CHECK(is_compatible(g, identity_assignment(g)).compatible);
    CHECK(is_compatible(g, inner_assignment(g)).compatible);
    CHECK(is_compatible(g, inverse_inner_assignment(g)).compatible);
    CHECK(quandle_from_compatible(g, identity_assignment(g)) == trivial_quandle(g.order()));
    CHECK(quandle_from_compatible(g, inner_assignment(g)) == conj_quandle(g, -1));
    // The anti-homomorphism x -> (g -> x^-1 g x) gives x * y = y^-1 x y.
    CHECK(quandle_from_compatible(g, inverse_inner_assignment(g)) == conj_quandle(g, 1));
  }
}

TEST_CASE("a compatible map on Z_3 that is not inner") {
  FiniteGroup z3 = cyclic_group(3);
  Perm inversion({0, 2, 1});
  Assignment phi = {Perm::identity(3), inversion, inversion};
  CHECK(is_compatible(z3, phi).compatible);
  CHECK_THROWS_AS(quandle_from_compatible(z3, phi), FixedPointHypothesisViolated);
}

TEST_CASE("incompatible and invalid assignments") {
  FiniteGroup s3 = symmetric_group(3);
  Assignment phi = identity_assignment(s3);
  phi[1] = inner_assignment(s3)[3];
  auto r = is_compatible(s3, phi);
  CHECK_FALSE(r.compatible);
  CHECK(r.x >= 0);
  CHECK_THROWS_AS(quandle_from_compatible(s3, phi), NotCompatible);

  Assignment bogus = identity_assignment(s3);
  bogus[0] = Perm({1, 0, 2, 3, 4, 5});
  CHECK_THROWS_AS(is_compatible(s3, bogus), NotAutomorphism);
}

TEST_CASE("disjoint union with identity actions") {
  Quandle r3 = dihedral_quandle(3);
  Quandle t2 = trivial_quandle(2);
  UnionSpec spec{r3, t2, std::vector<Perm>(3, Perm::identity(2)),
                 std::vector<Perm>(2, Perm::identity(3))};
  Quandle u = union_quandle(spec);
  CHECK(u.order() == 5);
  CHECK(subquandle(u, {0, 1, 2}).value() == r3);
  CHECK(orbit_partition(u).size() == 3);
}

TEST_CASE("the Joyce quandle from two trivial quandles") {
  UnionSpec spec{trivial_quandle(2), trivial_quandle(1), {Perm::identity(1), Perm::identity(1)},
                 {Perm({1, 0})}};
  Quandle u = union_quandle(spec);
  // Union order is x, z, y; the reference table lists x, y, z.
  CHECK(relabel(u, Perm({0, 2, 1})).rows() == kJoyce);
}

TEST_CASE("union failures are reported in order") {
  Quandle r3 = dihedral_quandle(3);
  Quandle t1 = trivial_quandle(1);
  // Over a trivial Q1 any permutation commutes with the right translations.
  UnionSpec free_tau{trivial_quandle(3), t1, std::vector<Perm>(3, Perm::identity(1)),
                     {Perm({1, 0, 2})}};
  CHECK(check_union_conditions(free_tau).condition == 0);
  CHECK_NOTHROW(union_quandle(free_tau));

  // tau(y) = S_0 on R_3: an automorphism, but condition (1) needs it to
  // commute with every right translation.
  UnionSpec cond{r3, t1, std::vector<Perm>(3, Perm::identity(1)), {r3.right_translation(0)}};
  CHECK(check_union_conditions(cond).condition == 1);
  CHECK_THROWS_AS(union_quandle(cond), Condition1Violated);

  UnionSpec shift{r3, t1, std::vector<Perm>(3, Perm::identity(1)), {Perm({1, 2, 0})}};
  CHECK_THROWS_AS(union_quandle(shift), Condition1Violated);
  // The mirror image trips condition (2).
  UnionSpec mirrored{t1, r3, {Perm({1, 2, 0})}, std::vector<Perm>(3, Perm::identity(1))};
  CHECK(check_union_conditions(mirrored).condition == 2);
  CHECK_THROWS_AS(union_quandle(mirrored), Condition2Violated);

  UnionSpec bad_entry{dihedral_quandle(4), t1, std::vector<Perm>(4, Perm::identity(1)),
                      {Perm({1, 0, 2, 3})}};
  CHECK_THROWS_AS(union_quandle(bad_entry), NotAutomorphism);
}

TEST_CASE("union conditions imply the quandle axioms on random data") {
  std::mt19937_64 rng(9);
  Quandle t2 = trivial_quandle(2);
  Quandle r3 = dihedral_quandle(3);
  PermGroup a2 = aut(t2), a3 = aut(r3);
  for (int trial = 0; trial < 200; ++trial) {
    UnionSpec spec{t2, r3, {}, {}};
    for (int i = 0; i < 2; ++i) spec.sigma.push_back(a3.elements()[rng() % a3.order()]);
    for (int i = 0; i < 3; ++i) spec.tau.push_back(a2.elements()[rng() % a2.order()]);
    bool valid = true;
    try {
      union_quandle(spec);
    } catch (Error const&) {
      valid = false;
    }
    bool table_ok = true;
    try {
      Quandle::from_table(union_table(spec));
    } catch (AxiomViolation const&) {
      table_ok = false;
    }
    CHECK(valid == table_ok);
  }
}

TEST_CASE("involutory doubles") {
  Quandle d = involutory_double(dihedral_quandle(3));
  CHECK(d.order() == 6);
  CHECK(involutory_double(trivial_quandle(3)) == trivial_quandle(6));
  CHECK_NOTHROW(involutory_double(dihedral_quandle(4)));
  CHECK_NOTHROW(involutory_double(core_quandle(symmetric_group(3))));
  CHECK_THROWS_AS(involutory_double(conj_quandle(symmetric_group(3))), NotInvolutory);
}
