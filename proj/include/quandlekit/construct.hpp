#ifndef QUANDLEKIT_CONSTRUCT_HPP_
#define QUANDLEKIT_CONSTRUCT_HPP_

#include <vector>

#include "quandlekit/fingroup.hpp"
#include "quandlekit/perm.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

/// One automorphism of G (on element indices) per element of G.
using Assignment = std::vector<Perm>;

struct CompatibilityResult {
  bool compatible = true;
  // First failing pair, or -1.
  int x = -1;
  int y = -1;
};

/// Checks phi(phi(x)(y)) = phi(x) phi(y) phi(x)^-1 for all pairs, composing
/// right to left. Throws NotAutomorphism when an entry is not in Aut(G).
CompatibilityResult is_compatible(FiniteGroup const& g, Assignment const& phi);

/// G with x * y = phi(y)(x). Throws NotAutomorphism, NotCompatible, or
/// FixedPointHypothesisViolated(x) when phi(x)(x) != x.
Quandle quandle_from_compatible(FiniteGroup const& g, Assignment const& phi);

/// x -> (g -> x g x^-1).
Assignment inner_assignment(FiniteGroup const& g);
/// x -> (g -> x^-1 g x).
Assignment inverse_inner_assignment(FiniteGroup const& g);
Assignment identity_assignment(FiniteGroup const& g);

/// Data for a quandle on Q1 + Q2: sigma gives an automorphism of Q2 per
/// element of Q1, tau an automorphism of Q1 per element of Q2.
struct UnionSpec {
  Quandle q1;
  Quandle q2;
  std::vector<Perm> sigma;
  std::vector<Perm> tau;
};

/// The four-case table on Q1 + Q2 with Q1 at indices 0..|Q1|-1 and Q2 after:
/// x*y inside Q1, x o y inside Q2, tau(y)(x) for x in Q1 and y in Q2, and
/// sigma(y)(x) for x in Q2 and y in Q1. Only shapes are checked.
Table union_table(UnionSpec const& spec);

struct ConditionWitness {
  // 0 when both conditions hold, else 1 or 2.
  int condition = 0;
  int x = -1, y = -1, z = -1;
};

/// Tests conditions (1) and (2) directly on the data; entries need only be
/// permutations of the right degree. Witnesses use local indices.
ConditionWitness check_union_conditions(UnionSpec const& spec);

/// Checks, in order: automorphism entries (NotAutomorphism), SigmaNotHom,
/// TauNotHom, Condition1Violated and Condition2Violated (witnesses use local
/// indices), then validates the assembled table.
Quandle union_quandle(UnionSpec const& spec);

/// Q + Q with sigma(x) = tau(x) = S_x. Throws NotInvolutory.
UnionSpec involutory_double_spec(Quandle const& q);
Quandle involutory_double(Quandle const& q);

}  // namespace quandlekit

#endif  // QUANDLEKIT_CONSTRUCT_HPP_
