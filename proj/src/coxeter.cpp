#include <numeric>

#include "quandlekit/fingroup.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

CoxeterReport coxeter_report(std::vector<int> const& factors, Caps const& caps) {
  if (factors.empty()) {
    throw HypothesisViolated("at least one cyclic factor is required");
  }
  CoxeterReport r;
  r.factors = factors;
  r.invariant_factor_form = true;
  long exponent = 1;
  std::size_t order = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 1) {
      throw HypothesisViolated("cyclic factors must be positive");
    }
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0) {
      r.invariant_factor_form = false;
    }
    exponent = std::lcm(exponent, static_cast<long>(factors[i]));
    order *= static_cast<std::size_t>(factors[i]);
    if (order > caps.group_order) {
      throw CapExceeded("group order for Coxeter report", caps.group_order);
    }
  }
  // The exponent plays the role of the largest invariant factor, so specs not
  // in invariant-factor form are still accepted.
  if (exponent % 2 != 0 || exponent <= 2) {
    throw HypothesisViolated("the group exponent must be even and greater than 2");
  }
  r.exponent = exponent;
  r.coxeter_m = exponent / 2;

  Quandle t = core_quandle(abelian_group(factors));
  auto gens = inner_generators(t);
  r.distinct_translations = static_cast<long>(gens.size());
  r.formula_count = 1;
  for (int n : factors) {
    r.formula_count *= n % 2 == 0 ? n / 2 : n;
  }
  r.counts_agree = r.formula_count == r.distinct_translations;

  r.involutions_hold = true;
  r.braid_relations_hold = true;
  for (std::size_t x = 0; x < t.order(); ++x) {
    Perm sx = t.right_translation(static_cast<int>(x));
    r.involutions_hold = r.involutions_hold && (sx * sx).is_identity();
    for (std::size_t y = 0; y < t.order(); ++y) {
      Perm sy = t.right_translation(static_cast<int>(y));
      r.braid_relations_hold =
          r.braid_relations_hold && power(sx * sy, r.coxeter_m).is_identity();
    }
  }

  r.inn_order = static_cast<long>(inn(t, caps).order());
  r.coxeter_order = uniform_coxeter_order(r.distinct_translations, r.coxeter_m);
  r.orders_match = r.coxeter_order && *r.coxeter_order == r.inn_order;
  return r;
}

}  // namespace quandlekit
