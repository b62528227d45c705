#ifndef QUANDLEKIT_COCYCLE_HPP_
#define QUANDLEKIT_COCYCLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quandlekit/caps.hpp"
#include "quandlekit/perm.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

using CocycleTable = std::vector<std::vector<Perm>>;

/// A constant quandle cocycle alpha : Q x Q -> Sym(S), S = {0, ..., s-1}.
///
/// Invariants: alpha(x, x) = id and
/// alpha(x*y, z) alpha(x, y) = alpha(x*z, y*z) alpha(x, z).
class ConstantCocycle {
 public:
  std::size_t fiber_size() const noexcept { return fiber_; }
  Quandle const& base() const noexcept { return base_; }
  Perm const& at(int x, int y) const {
    return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  CocycleTable const& table() const noexcept { return table_; }

  friend bool operator==(ConstantCocycle const& a, ConstantCocycle const& b) {
    return a.fiber_ == b.fiber_ && a.base_ == b.base_ && a.table_ == b.table_;
  }
  friend ConstantCocycle validate_constant(Quandle const& base, std::size_t fiber_size,
                                           CocycleTable table);

 private:
  Quandle base_;
  std::size_t fiber_ = 0;
  CocycleTable table_;
};

/// Throws DiagonalViolation or CocycleViolation with the first witness, and
/// std::invalid_argument on shape errors.
ConstantCocycle validate_constant(Quandle const& base, std::size_t fiber_size,
                                  CocycleTable table);
ConstantCocycle trivial_cocycle(Quandle const& base, std::size_t fiber_size);

/// Q x_alpha S with (x, t) * (y, s) = (x*y, alpha(x, y)(t)); the pair (x, t)
/// sits at index x * |S| + t.
Quandle extend(ConstantCocycle const& alpha);

/// One permutation of S per base element.
using LambdaMap = std::vector<Perm>;

/// The cocycle beta(x, y) = lambda(x*y) alpha(x, y) lambda(x)^-1, which is
/// cohomologous to alpha through lambda.
ConstantCocycle transport(ConstantCocycle const& alpha, LambdaMap const& lambda);

/// Some lambda with alpha(x, y) = lambda(x*y)^-1 beta(x, y) lambda(x) for all
/// pairs, or nullopt. Throws CapExceeded when (|S|!)^|Q| exceeds caps.elements.
std::optional<LambdaMap> are_cohomologous(ConstantCocycle const& alpha,
                                          ConstantCocycle const& beta,
                                          Caps const& caps = {});

/// f(x, t) = (x, lambda(x)(t)) on pair indices: an isomorphism from the
/// extension by alpha to the extension by transport(alpha, lambda).
Perm fiberwise_map(LambdaMap const& lambda, std::size_t fiber_size);

/// (phi, theta) . alpha at (x, y) is theta alpha(phi^-1 x, phi^-1 y) theta^-1.
/// Throws NotAutomorphism unless phi is an automorphism of the base.
ConstantCocycle act(Perm const& phi, Perm const& theta, ConstantCocycle const& alpha);

/// Pairs (phi, theta) in Aut(Q) x Sym(S) are stored as one permutation of
/// |Q| + |S| points: phi on the first block, theta on the second.
Perm pair_perm(Perm const& phi, Perm const& theta);
std::pair<Perm, Perm> split_pair(Perm const& pair, std::size_t base_order);

/// Aut(Q) x Sym(S) in the pair encoding. Throws CapExceeded.
PermGroup aut_times_symmetric(Quandle const& base, std::size_t fiber_size,
                              Caps const& caps = {});
/// Pairs fixing alpha under act, checked to form a subgroup.
PermGroup cocycle_stabilizer(ConstantCocycle const& alpha, Caps const& caps = {});

/// gamma(x, t) = (phi(x), theta(t)) on pair indices, with no checks.
Perm product_map(Perm const& phi, Perm const& theta);
/// gamma for a stabilizing pair, verified to be an automorphism of extend(alpha).
/// Throws NotInStabilizer when the pair does not fix alpha.
Perm embed(Perm const& phi, Perm const& theta, ConstantCocycle const& alpha);

/// Every valid cocycle on the base with the given fiber, in lexicographic
/// order of their tables. Throws CapExceeded when (|S|!)^(|Q|^2 - |Q|)
/// exceeds caps.elements.
std::vector<ConstantCocycle> enumerate_constant_cocycles(Quandle const& base,
                                                         std::size_t fiber_size,
                                                         Caps const& caps = {});
/// One representative per cohomology class (a set; no group structure).
/// Throws CapExceeded when (|S|!)^|Q| exceeds caps.elements.
std::vector<ConstantCocycle> cohomology_classes(Quandle const& base,
                                                std::size_t fiber_size,
                                                Caps const& caps = {});

/// Coefficients A = Z_{m_1} + ... + Z_{m_r}; elements are tuples and are
/// indexed in tuple-lexicographic order.
struct Coefficients {
  std::vector<int> moduli;

  std::size_t order() const;
  std::vector<int> element(std::size_t index) const;
  std::size_t index(std::vector<int> const& element) const;
  std::vector<int> add(std::vector<int> const& a, std::vector<int> const& b) const;
  std::vector<int> zero() const { return std::vector<int>(moduli.size(), 0); }
};

/// A quandle 2-cocycle mu : Q x Q -> A, table[x][y] a coefficient tuple.
struct AbelianCocycle {
  Quandle base;
  Coefficients coefficients;
  std::vector<std::vector<std::vector<int>>> table;
};

/// Throws DiagonalViolation or CocycleViolation for the additive conditions
/// mu(x, x) = 0 and mu(x*y, z) + mu(x, y) = mu(x*z, y*z) + mu(x, z).
void validate_abelian(AbelianCocycle const& mu);
/// psi mu: each value becomes the translation b -> b + mu(x, y) of A.
/// The result is validated as a constant cocycle.
ConstantCocycle abelian_to_constant(AbelianCocycle const& mu);
/// E(Q, A, mu) built directly: (x, a) * (y, b) = (x*y, a + mu(x, y)).
Quandle abelian_extension(AbelianCocycle const& mu);

struct H2Result {
  /// One cyclic order per returned generator, grouped by coefficient component.
  std::vector<std::int64_t> cyclic_orders;
  /// The same group in invariant-factor form (entries > 1).
  std::vector<std::int64_t> invariant_factors;
  std::size_t order = 1;
  /// Representative cocycle for each entry of cyclic_orders.
  std::vector<AbelianCocycle> generators;
  /// Orders of the cocycle group Z^2 and the coboundary group B^2.
  std::size_t cocycle_count = 1;
  std::size_t coboundary_count = 1;
};

/// H^2(Q, A) with coboundaries lambda(x) - lambda(x*y), via integer Smith
/// forms. Throws CapExceeded when |Q| exceeds caps.quandle_order or the
/// group order overflows, and ArithmeticOverflow on entry growth.
H2Result compute_h2(Quandle const& q, std::vector<int> const& moduli,
                    Caps const& caps = {});

}  // namespace quandlekit

#endif  // QUANDLEKIT_COCYCLE_HPP_
