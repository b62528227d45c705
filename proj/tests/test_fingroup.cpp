#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "quandlekit/fingroup.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

namespace {

// Aut(G) by filtering every bijection of the element set.
std::size_t naive_aut_order(FiniteGroup const& g) {
  std::vector<int> im(g.order());
  std::iota(im.begin(), im.end(), 0);
  std::size_t count = 0;
  do {
    count += is_group_automorphism(g, Perm(im)) ? 1 : 0;
  } while (std::next_permutation(im.begin(), im.end()));
  return count;
}

std::size_t naive_center_size(FiniteGroup const& g) {
  std::size_t count = 0;
  int const n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n; ++b) central = central && g.mul(a, b) == g.mul(b, a);
    count += central ? 1 : 0;
  }
  return count;
}

std::size_t involution_count(FiniteGroup const& g) {
  std::size_t c = 0;
  for (int a = 0; a < static_cast<int>(g.order()); ++a) c += g.element_order(a) == 2 ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("group specs") {
  FiniteGroup z4 = make_group("Z4");
  CHECK(z4.order() == 4);
  CHECK(z4.is_abelian());
  CHECK(z4.element_order(1) == 4);

  FiniteGroup s3 = make_group("S3");
  CHECK(s3.order() == 6);
  CHECK(center(s3).size() == 1);

  FiniteGroup z2z4 = make_group("Z2xZ4");
  CHECK(z2z4.order() == 8);
  CHECK(parse_cyclic_factors("Z2xZ4") == std::vector<int>{2, 4});
  CHECK(is_isomorphic(z2z4, abelian_group({2, 4})).has_value());

  CHECK(make_group("D4").order() == 8);
  CHECK(make_group("Q8").order() == 8);
  CHECK(make_group("Z2xS3").order() == 12);
}

TEST_CASE("malformed and unsupported specs") {
  CHECK_THROWS_AS(make_group(""), ParseError);
  CHECK_THROWS_AS(make_group("Zx"), ParseError);
  CHECK_THROWS_AS(make_group("Z2x"), ParseError);
  CHECK_THROWS_AS(make_group("A5"), ParseError);
  CHECK_THROWS_AS(make_group("S9"), UnsupportedSpec);
  CHECK_THROWS_AS(make_group("Z10xZ10xZ10"), UnsupportedSpec);
}

TEST_CASE("table validation") {
  CHECK_THROWS(FiniteGroup(2, {0, 1, 1, 1}));
  // Latin square without associativity: a loop of order 5.
  std::vector<int> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                           3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS(FiniteGroup(5, loop));
}

TEST_CASE("centers by brute force") {
  for (auto const& spec : {"Z6", "S3", "D4", "Q8", "Z2xZ2xZ2", "S4"}) {
    FiniteGroup g = make_group(spec);
    CHECK(center(g).size() == naive_center_size(g));
  }
  CHECK(center(symmetric_group(3)) == std::vector<int>{symmetric_group(3).identity()});
  CHECK(center(quaternion_group()).size() == 2);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(abelian_group({2, 2})).order() == 6);
  CHECK(automorphism_group(cyclic_group(5)).order() == 4);
  CHECK(automorphism_group(cyclic_group(2)).order() == 1);
  CHECK(automorphism_group(quaternion_group()).order() == 24);
  CHECK(automorphism_group(dihedral_group(4)).order() == 8);
  for (auto const& spec : {"Z6", "S3", "D4", "Z2xZ4"}) {
    FiniteGroup g = make_group(spec);
    CHECK(automorphism_group(g).order() == naive_aut_order(g));
  }
}

TEST_CASE("isomorphism") {
  CHECK_FALSE(is_isomorphic(cyclic_group(4), abelian_group({2, 2})).has_value());
  CHECK_FALSE(is_isomorphic(dihedral_group(4), quaternion_group()).has_value());
  CHECK(involution_count(dihedral_group(4)) == 5);
  CHECK(involution_count(quaternion_group()) == 1);
  CHECK(is_isomorphic(dihedral_group(3), symmetric_group(3)).has_value());
  CHECK(is_isomorphic(cyclic_group(6), abelian_group({2, 3})).has_value());

  Quandle r4 = dihedral_quandle(4);
  PermGroup inn4 = inn(r4);
  auto w = is_isomorphic(to_finite_group(inn4), abelian_group({2, 2}));
  REQUIRE(w.has_value());
  CHECK(w->size() == 4);
}

TEST_CASE("semidirect products") {
  FiniteGroup v4 = abelian_group({2, 2});
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup direct = semidirect(v4, z2, {Perm::identity(4), Perm::identity(4)});
  CHECK(is_isomorphic(direct, direct_product(v4, z2)).has_value());

  // Elements of Z2^2 are (0,0), (0,1), (1,0), (1,1); the swap exchanges 1 and 2.
  FiniteGroup swapped = semidirect(v4, z2, {Perm::identity(4), Perm({0, 2, 1, 3})});
  CHECK(swapped.order() == 8);
  CHECK(is_isomorphic(swapped, dihedral_group(4)).has_value());

  CHECK_THROWS_AS(semidirect(cyclic_group(3), z2, {Perm({0, 2, 1}), Perm({0, 2, 1})}),
                  NotAHomomorphism);
}

TEST_CASE("conjugation quandles") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(is_trivial(conj_quandle(s3, 0)));
  CHECK(is_trivial(conj_quandle(cyclic_group(5))));
  Quandle c = conj_quandle(s3);
  auto orbits = orbit_partition(c);
  std::vector<std::size_t> sizes;
  for (auto const& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  // x * y = y^-1 x y.
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      CHECK(c.op(x, y) == s3.mul(s3.mul(s3.inverse(y), x), y));
    }
  }
}

TEST_CASE("core and Alexander quandles") {
  CHECK(is_trivial(core_quandle(abelian_group({2, 2}))));
  Quandle core_s3 = core_quandle(symmetric_group(3));
  CHECK(core_s3.order() == 6);
  CHECK(is_involutory(core_s3));
  CHECK(core_quandle(cyclic_group(5)) == dihedral_quandle(5));

  FiniteGroup z5 = cyclic_group(5);
  Perm neg({0, 4, 3, 2, 1});
  CHECK(alexander_quandle(z5, neg) == core_quandle(z5));
  CHECK(is_trivial(alexander_quandle(z5, Perm::identity(5))));
  Quandle a2 = alexander_quandle(z5, Perm({0, 2, 4, 1, 3}));
  CHECK(is_connected(a2));

  CHECK_THROWS_AS(alexander_quandle(symmetric_group(3), Perm::identity(6)), NotAbelian);
  CHECK_THROWS_AS(alexander_quandle(z5, Perm({1, 0, 2, 3, 4})), NotAutomorphism);
}
