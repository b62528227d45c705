#ifndef QUANDLEKIT_PERM_HPP_
#define QUANDLEKIT_PERM_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "quandlekit/caps.hpp"
#include "quandlekit/error.hpp"

namespace quandlekit {

/// A bijection of {0, ..., n-1}, stored as its image sequence.
///
/// Products follow function composition: `(a * b)(p) == a(b(p))`, so `b`
/// is applied first.
class Perm {
 public:
  Perm() = default;
  /// Throws InvalidTable unless `images` is a rearrangement of 0..n-1.
  explicit Perm(std::vector<int> images);

  static Perm identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. `{{0, 1}, {2, 4, 3}}`.
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<int>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::vector<int> const& images() const noexcept { return images_; }

  Perm inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;
  /// Cycle lengths sorted ascending, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  /// Cycle notation such as "(0 1)(2 3)"; "()" for the identity.
  std::string to_string() const;

  friend Perm operator*(Perm const& a, Perm const& b);
  friend bool operator==(Perm const&, Perm const&) = default;
  friend auto operator<=>(Perm const&, Perm const&) = default;

 private:
  std::vector<int> images_;
};

/// `p` raised to an integer power (negative allowed).
Perm power(Perm const& p, long exponent);

struct PermHash {
  std::size_t operator()(Perm const& p) const noexcept;
};

/// A permutation group with every element materialized.
///
/// Elements are kept sorted lexicographically by image sequence, so the
/// element list of a group does not depend on which generators produced it.
class PermGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::vector<Perm> const& generators() const& noexcept { return generators_; }
  std::vector<Perm> const& elements() const& noexcept { return elements_; }
  // Rvalue overloads keep range-for over a temporary group safe.
  std::vector<Perm> generators() && { return std::move(generators_); }
  std::vector<Perm> elements() && { return std::move(elements_); }
  bool contains(Perm const& p) const;
  /// Position of `p` in elements(), or -1.
  long index_of(Perm const& p) const;

  friend PermGroup closure(std::span<Perm const> generators, std::size_t cap,
                           std::size_t degree);
  /// Wraps an explicit element set. With `verify` the set is checked to be a
  /// group (quadratic in the order). An empty generator list is replaced by a
  /// greedily chosen generating set.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements,
                                 std::vector<Perm> generators = {},
                                 bool verify = true);

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

/// The group generated by `generators`. `degree` is only consulted when the
/// generator list is empty. Throws CapExceeded when the group would exceed
/// `cap` elements.
PermGroup closure(std::span<Perm const> generators,
                  std::size_t cap = Caps{}.elements, std::size_t degree = 0);

/// Orbits of the group generated by `generators`, each sorted, listed by
/// smallest element.
std::vector<std::vector<int>> orbit_partition(std::span<Perm const> generators,
                                              std::size_t degree);

/// True iff G maps some fixed k-tuple of distinct points onto every k-tuple of
/// distinct points. Vacuously true when k exceeds the degree.
bool is_k_transitive(PermGroup const& group, std::size_t k);

/// Elements g of `group` with `action(g, x) == x`. The result is checked for
/// closure; NotASubgroup signals that `action` was not a group action.
template <class Point, class Action>
std::vector<Perm> stabilizer(PermGroup const& group, Action&& action,
                             Point const& x) {
  std::vector<Perm> result;
  for (auto const& g : group.elements()) {
    if (action(g, x) == x) {
      result.push_back(g);
    }
  }
  // The element list is sorted, hence so is the filtered list.
  auto in_result = [&](Perm const& p) {
    return std::binary_search(result.begin(), result.end(), p);
  };
  if (result.empty() || !in_result(Perm::identity(group.degree()))) {
    throw NotASubgroup("stabilizer does not contain the identity");
  }
  for (auto const& a : result) {
    if (!in_result(a.inverse())) {
      throw NotASubgroup("stabilizer is not closed under inversion");
    }
    for (auto const& b : result) {
      if (!in_result(a * b)) {
        throw NotASubgroup("stabilizer is not closed under composition");
      }
    }
  }
  if (group.order() % result.size() != 0) {
    throw NotASubgroup("stabilizer order does not divide the group order");
  }
  return result;
}

}  // namespace quandlekit

#endif  // QUANDLEKIT_PERM_HPP_
