#ifndef QUANDLEKIT_FINGROUP_HPP_
#define QUANDLEKIT_FINGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quandlekit/caps.hpp"
#include "quandlekit/perm.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

/// A finite group stored as its full multiplication table.
///
/// Construction checks the Latin-square property, associativity, and the
/// existence of an identity; inverses are derived from the table.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// `table` is row-major: `table[a * n + b] == a * b`.
  FiniteGroup(std::size_t order, std::vector<int> table,
              std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)];
  }
  int identity() const noexcept { return identity_; }
  int inverse(int a) const { return inverses_[static_cast<std::size_t>(a)]; }
  int power(int a, long k) const;
  std::size_t element_order(int a) const;
  bool is_abelian() const;
  std::vector<int> const& table() const noexcept { return table_; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  std::string label(int a) const;
  /// Left multiplication by `a` as a permutation of element indices.
  Perm left_regular(int a) const;

 private:
  std::size_t order_ = 0;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverses_;
  std::vector<std::string> labels_;
};

/// Z_n with elements 0..n-1.
FiniteGroup cyclic_group(std::size_t n);
/// S_n with elements in lexicographic one-line order; product is composition
/// (apply the right factor first).
FiniteGroup symmetric_group(std::size_t n);
/// The dihedral group of order 2n; index s*n + i stands for r^i s^s.
FiniteGroup dihedral_group(std::size_t n);
/// Q_8 ordered 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group();
/// Pairs (g, h) at index g * |H| + h.
FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h);
/// Z_{m_1} x ... x Z_{m_r}, tuples in lexicographic order.
FiniteGroup abelian_group(std::vector<int> const& moduli);

/// Parses `atom ("x" atom)*` with atoms `Z<n>`, `S<n>`, `D<n>`, `Q8`.
/// Throws ParseError on malformed input and UnsupportedSpec on sizes outside
/// the catalog (S_n for n <= 5, D_n for n <= 6, total order <= 200).
FiniteGroup make_group(std::string_view spec);
/// The cyclic orders of a spec made only of Z atoms, e.g. "Z2xZ4" -> {2, 4}.
std::vector<int> parse_cyclic_factors(std::string_view spec);

std::vector<int> center(FiniteGroup const& g);

/// Whether `phi` (a permutation of element indices) preserves the table.
bool is_group_automorphism(FiniteGroup const& g, Perm const& phi);

/// A generating set found greedily, then shrunk by exhaustive search over
/// smaller subsets while that is cheap.
std::vector<int> small_generating_set(FiniteGroup const& g);

/// Aut(G) as a permutation group on element indices.
PermGroup automorphism_group(FiniteGroup const& g, Caps const& caps = {});

/// Isomorphism witness (images of g's elements in h) or nullopt.
std::optional<std::vector<int>> is_isomorphic(FiniteGroup const& g,
                                              FiniteGroup const& h,
                                              Caps const& caps = {});

/// N x| H with (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1 h2); pairs at index
/// n * |H| + h. `action[h]` is an automorphism of N on element indices.
/// Throws NotAHomomorphism unless h -> action[h] is a homomorphism into Aut(N).
FiniteGroup semidirect(FiniteGroup const& n, FiniteGroup const& h,
                       std::vector<Perm> const& action);

/// The abstract group of a materialized permutation group, elements in the
/// group's sorted order.
FiniteGroup to_finite_group(PermGroup const& g);

/// Conj_n(G): x * y = y^-n x y^n.
Quandle conj_quandle(FiniteGroup const& g, long n = 1);
/// Core(G): x * y = y x^-1 y (the Takasaki quandle when G is abelian).
Quandle core_quandle(FiniteGroup const& g);
/// Alex(A, phi): x * y = phi(x y^-1) y. Throws NotAbelian or NotAutomorphism.
Quandle alexander_quandle(FiniteGroup const& a, Perm const& phi);

}  // namespace quandlekit

#endif  // QUANDLEKIT_FINGROUP_HPP_
