#include <random>
#include <set>

#include "doctest.h"
#include "quandlekit/perm.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

namespace {

// Breadth-first closure kept deliberately naive.
std::set<std::vector<int>> naive_closure(std::vector<Perm> const& gens, std::size_t degree) {
  std::set<std::vector<int>> seen{Perm::identity(degree).images()};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const& a : frontier) {
      for (auto const& g : gens) {
        Perm b = g * a;
        if (seen.insert(b.images()).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<Perm> translations(Quandle const& q) {
  std::vector<Perm> out;
  for (int y = 0; y < static_cast<int>(q.order()); ++y) out.push_back(q.right_translation(y));
  return out;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  Perm ab = a * b;
  CHECK(ab(1) == a(b(1)));
  CHECK(ab == Perm({1, 2, 0}));
  CHECK(ab != b * a);
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), InvalidTable);
  CHECK_THROWS_AS(Perm({0, 3, 1}), InvalidTable);
  CHECK_THROWS_AS(Perm({-1, 0}), InvalidTable);
}

TEST_CASE("inverse, power, order and cycle type") {
  Perm p = Perm::from_cycles(5, {{0, 1, 2}, {3, 4}});
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 6);
  CHECK(power(p, 6).is_identity());
  CHECK(power(p, -1) == p.inverse());
  CHECK(power(p, 4) == power(p, -2));
  CHECK(p.cycle_type() == std::vector<std::size_t>{2, 3});
  CHECK(p.to_string() == "(0 1 2)(3 4)");
  CHECK(Perm::identity(3).to_string() == "()");
}

TEST_CASE("closure orders") {
  Perm t = Perm::from_cycles(2, {{0, 1}});
  CHECK(closure(std::vector<Perm>{t}).order() == 2);

  Quandle r4 = dihedral_quandle(4);
  std::vector<Perm> g4{r4.right_translation(0), r4.right_translation(1)};
  CHECK(closure(g4).order() == 4);

  Quandle r6 = dihedral_quandle(6);
  std::vector<Perm> g6{r6.right_translation(0), r6.right_translation(1), r6.right_translation(2)};
  PermGroup c6 = closure(g6);
  CHECK(c6.order() == 6);
  CHECK(naive_closure(g6, 6).size() == 6);

  CHECK(closure(std::vector<Perm>{}, Caps{}.elements, 4).order() == 1);
}

TEST_CASE("closure agrees with a naive breadth-first oracle on random generators") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t degree = 2 + rng() % 5;
    std::vector<Perm> gens;
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
      std::vector<int> im(degree);
      for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<int>(i);
      std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(im);
    }
    PermGroup g = closure(gens);
    auto oracle = naive_closure(gens, degree);
    REQUIRE(g.order() == oracle.size());
    for (auto const& e : g.elements()) CHECK(oracle.count(e.images()) == 1);
    CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  }
}

TEST_CASE("closure respects the element cap") {
  std::vector<Perm> s6{Perm::from_cycles(6, {{0, 1}}), Perm({1, 2, 3, 4, 5, 0})};
  CHECK(closure(s6).order() == 720);
  CHECK_THROWS_AS(closure(s6, 100), CapExceeded);
}

TEST_CASE("element order does not depend on the generators") {
  std::vector<Perm> a{Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})};
  std::vector<Perm> b{Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{0, 2}})};
  CHECK(closure(a).elements() == closure(b).elements());
  CHECK(closure(a).index_of(Perm::identity(3)) == 0);
  CHECK(closure(a).contains(Perm::from_cycles(3, {{0, 2, 1}})));
}

TEST_CASE("orbit partitions") {
  CHECK(orbit_partition(std::span<Perm const>{}, 3)
        == std::vector<std::vector<int>>{{0}, {1}, {2}});
  auto r6 = translations(dihedral_quandle(6));
  CHECK(orbit_partition(r6, 6) == std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
}

TEST_CASE("k-transitivity") {
  std::vector<Perm> s3{Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})};
  CHECK(is_k_transitive(closure(s3), 3));
  auto r4 = dihedral_quandle(4);
  PermGroup inn4 = closure(translations(r4));
  CHECK_FALSE(is_k_transitive(inn4, 1));
  CHECK(is_k_transitive(inn4, 5));
  CHECK(is_k_transitive(closure(std::span<Perm const>{}, 10, 2), 3));
}

TEST_CASE("stabilizers") {
  std::vector<Perm> s2{Perm::from_cycles(2, {{0, 1}})};
  PermGroup g = closure(s2);
  auto point = [](Perm const& p, int x) { return p(x); };
  CHECK(stabilizer(g, point, 0) == std::vector<Perm>{Perm::identity(2)});
  auto trivial = [](Perm const&, int x) { return x; };
  CHECK(stabilizer(g, trivial, 0).size() == g.order());
  // A map that is not an action can produce a non-subgroup.
  std::vector<Perm> s3{Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})};
  auto bogus = [](Perm const& p, int) { return p(0) == 1 ? 0 : 1; };
  CHECK_THROWS_AS(stabilizer(closure(s3), bogus, 0), NotASubgroup);
}

TEST_CASE("from_elements verifies group structure") {
  std::vector<Perm> els{Perm::identity(2), Perm::from_cycles(2, {{0, 1}})};
  CHECK(PermGroup::from_elements(2, els).order() == 2);
  std::vector<Perm> bad{Perm::identity(3), Perm::from_cycles(3, {{0, 1, 2}})};
  CHECK_THROWS(PermGroup::from_elements(3, bad));
}
