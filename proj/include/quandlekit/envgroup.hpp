#ifndef QUANDLEKIT_ENVGROUP_HPP_
#define QUANDLEKIT_ENVGROUP_HPP_

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quandlekit/perm.hpp"
#include "quandlekit/quandle.hpp"
#include "quandlekit/smith.hpp"

namespace quandlekit {

/// One generator or its inverse, 0-based.
struct Letter {
  int gen = 0;
  bool inverse = false;

  friend bool operator==(Letter const&, Letter const&) = default;
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

using Word = std::vector<Letter>;

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(Word const& w);
Word inverse(Word const& w);
/// From the file convention: +g is generator g-1, -g its inverse. Zero is rejected.
Word word_from_signed(std::vector<int> const& letters);
std::vector<int> signed_from_word(Word const& w);
/// e.g. "a0^-1 a1 a0".
std::string to_string(Word const& w);

struct Presentation {
  std::size_t ngens = 0;
  std::vector<Word> relators;

  /// Throws std::out_of_range when a letter names a missing generator.
  void validate() const;
};

/// Generators a_0..a_{n-1}; for each ordered pair i != j the relator
/// a_i^-1 a_j a_i a_{j*i}^-1.
Presentation presentation_of(Quandle const& q);

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(Presentation const& p);

struct Abelianization {
  std::size_t free_rank = 0;
  /// Invariant factors greater than one.
  std::vector<std::int64_t> torsion;

  friend bool operator==(Abelianization const&, Abelianization const&) = default;
};
Abelianization abelianization(Presentation const& p);

/// The words a_{j*i}^-1 a_j over all ordered pairs (i, j), each equal in
/// G_Q to the commutator a_i^-1 a_j^-1 a_i a_j. Not reduced; duplicates removed.
std::vector<Word> commutator_generators(Quandle const& q);

struct CosetOptions {
  std::size_t max_cosets = 100'000;
  /// Process relators and subgroup generators in reverse order.
  bool reverse_order = false;
};

struct CosetTable {
  std::size_t index = 0;
  /// table[c][2g] is c * a_g, table[c][2g+1] is c * a_g^-1; coset 0 is H.
  std::vector<std::vector<int>> table;
};

/// HLT coset enumeration with lookahead. Throws CosetLimitExceeded when the
/// number of live cosets would pass max_cosets; the completed table is
/// checked against every relator and subgroup generator before returning.
CosetTable enumerate_cosets(Presentation const& p, std::vector<Word> const& subgroup,
                            CosetOptions const& options = {});
std::size_t todd_coxeter(Presentation const& p, std::vector<Word> const& subgroup,
                         CosetOptions const& options = {});

/// A group whose elements can be multiplied on demand; Element must be
/// totally ordered so probes can deduplicate.
template <class M>
concept ConcreteModel = requires(M const& m, typename M::Element const& a) {
  { m.identity() } -> std::convertible_to<typename M::Element>;
  { m.multiply(a, a) } -> std::convertible_to<typename M::Element>;
  { m.invert(a) } -> std::convertible_to<typename M::Element>;
  { a < a } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
};

/// (Z, +).
struct IntegerModel {
  using Element = std::int64_t;
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return checked_add(a, b); }
  Element invert(Element a) const { return checked_mul(a, -1); }
};

/// Z_k x| Z with (a, m)(b, n) = (a + (-1)^m b, m + n).
struct CyclicByIntegerModel {
  using Element = std::pair<std::int64_t, std::int64_t>;
  std::int64_t k = 3;

  Element identity() const { return {0, 0}; }
  Element multiply(Element const& x, Element const& y) const {
    std::int64_t b = x.second % 2 == 0 ? y.first : -y.first;
    return {mod(x.first + b), checked_add(x.second, y.second)};
  }
  Element invert(Element const& x) const {
    // (a, m)^-1 = (-(-1)^m a, -m).
    std::int64_t a = x.second % 2 == 0 ? -x.first : x.first;
    return {mod(a), checked_mul(x.second, -1)};
  }
  std::int64_t mod(std::int64_t a) const { return ((a % k) + k) % k; }
};

/// Permutations of a fixed degree under composition.
struct PermModel {
  using Element = Perm;
  std::size_t degree = 0;
  Element identity() const { return Perm::identity(degree); }
  Element multiply(Element const& a, Element const& b) const { return a * b; }
  Element invert(Element const& a) const { return a.inverse(); }
};

template <ConcreteModel M>
typename M::Element evaluate(M const& model, std::vector<typename M::Element> const& images,
                             Word const& w) {
  auto acc = model.identity();
  for (auto const& l : w) {
    auto const& g = images.at(static_cast<std::size_t>(l.gen));
    acc = model.multiply(acc, l.inverse ? model.invert(g) : g);
  }
  return acc;
}

template <class Element>
struct HomReport {
  bool relators_hold = true;
  /// Relator indices whose image is not the identity.
  std::vector<std::size_t> failing_relators;
  std::size_t probe_length = 0;
  std::size_t elements_seen = 0;
  std::vector<Element> targets;
  std::vector<bool> targets_reached;
};

struct ProbeOptions {
  std::size_t max_length = 8;
  std::size_t max_elements = 100'000;
};

/// Checks that `images` satisfy every relator, then walks products of the
/// images and their inverses breadth-first up to the word-length bound and
/// records which `targets` were reached.
template <ConcreteModel M>
HomReport<typename M::Element> verify_hom(Presentation const& p, M const& model,
                                          std::vector<typename M::Element> const& images,
                                          std::vector<typename M::Element> const& targets,
                                          ProbeOptions const& probe = {}) {
  using E = typename M::Element;
  if (images.size() != p.ngens) {
    throw std::invalid_argument("verify_hom needs one image per generator");
  }
  HomReport<E> r;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (!(evaluate(model, images, p.relators[i]) == model.identity())) {
      r.relators_hold = false;
      r.failing_relators.push_back(i);
    }
  }
  std::vector<E> steps;
  for (auto const& g : images) {
    steps.push_back(g);
    steps.push_back(model.invert(g));
  }
  std::set<E> seen{model.identity()};
  std::vector<E> frontier{model.identity()};
  std::size_t length = 0;
  while (length < probe.max_length && !frontier.empty()
         && seen.size() < probe.max_elements) {
    std::vector<E> next;
    for (auto const& x : frontier) {
      for (auto const& s : steps) {
        E y = model.multiply(x, s);
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
    ++length;
  }
  r.probe_length = length;
  r.elements_seen = seen.size();
  r.targets = targets;
  for (auto const& t : targets) {
    r.targets_reached.push_back(seen.count(t) > 0);
  }
  return r;
}

/// <x0, x1 | x1 x0 x1 = x0 x1 x0, x0^2 = x1^2>, as relators
/// x1 x0 x1 x0^-1 x1^-1 x0^-1 and x0 x0 x1^-1 x1^-1.
Presentation braid_square_presentation();

}  // namespace quandlekit

#endif  // QUANDLEKIT_ENVGROUP_HPP_
