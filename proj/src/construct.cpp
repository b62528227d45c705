#include "quandlekit/construct.hpp"

#include <stdexcept>
#include <string>

namespace quandlekit {

namespace {

void require_automorphisms(FiniteGroup const& g, Assignment const& phi) {
  if (phi.size() != g.order()) {
    throw std::invalid_argument("assignment needs one automorphism per group element");
  }
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (!is_group_automorphism(g, phi[x])) {
      throw NotAutomorphism("assigned map for element " + std::to_string(x)
                            + " is not an automorphism of the group");
    }
  }
}

void require_quandle_automorphisms(Quandle const& target, std::vector<Perm> const& maps,
                                   std::size_t count, char const* name) {
  if (maps.size() != count) {
    throw std::invalid_argument(std::string(name) + " needs one map per element");
  }
  for (auto const& m : maps) {
    if (m.degree() != target.order() || !is_automorphism(target, m)) {
      throw NotAutomorphism(std::string(name) + " entry is not a quandle automorphism");
    }
  }
}

// map: Q -> Conj_{-1}(Aut(target)), i.e. map(x*y) = map(y) map(x) map(y)^-1.
bool conj_minus_one_hom(Quandle const& q, std::vector<Perm> const& map) {
  int const n = static_cast<int>(q.order());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      auto const& my = map[static_cast<std::size_t>(y)];
      if (map[static_cast<std::size_t>(q.op(x, y))]
          != my * map[static_cast<std::size_t>(x)] * my.inverse()) {
        return false;
      }
    }
  }
  return true;
}

Assignment by_conjugation(FiniteGroup const& g, bool inverse_first) {
  Assignment out;
  int const n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x) {
    int a = inverse_first ? g.inverse(x) : x;
    std::vector<int> images(g.order());
    for (int h = 0; h < n; ++h) {
      images[static_cast<std::size_t>(h)] = g.mul(g.mul(a, h), g.inverse(a));
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

}  // namespace

CompatibilityResult is_compatible(FiniteGroup const& g, Assignment const& phi) {
  require_automorphisms(g, phi);
  int const n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x) {
    auto const& px = phi[static_cast<std::size_t>(x)];
    Perm const px_inv = px.inverse();
    for (int y = 0; y < n; ++y) {
      if (phi[static_cast<std::size_t>(px(y))] != px * phi[static_cast<std::size_t>(y)] * px_inv) {
        return {false, x, y};
      }
    }
  }
  return {};
}

Quandle quandle_from_compatible(FiniteGroup const& g, Assignment const& phi) {
  auto check = is_compatible(g, phi);
  if (!check.compatible) {
    throw NotCompatible("assignment is not compatible at (x,y) = ("
                        + std::to_string(check.x) + "," + std::to_string(check.y) + ")");
  }
  int const n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x) {
    if (phi[static_cast<std::size_t>(x)](x) != x) {
      throw FixedPointHypothesisViolated(x);
    }
  }
  std::vector<int> flat(g.order() * g.order());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      flat[static_cast<std::size_t>(x * n + y)] = phi[static_cast<std::size_t>(y)](x);
    }
  }
  return Quandle::from_flat(g.order(), std::move(flat), g.labels());
}

Assignment inner_assignment(FiniteGroup const& g) { return by_conjugation(g, false); }
Assignment inverse_inner_assignment(FiniteGroup const& g) { return by_conjugation(g, true); }
Assignment identity_assignment(FiniteGroup const& g) {
  return Assignment(g.order(), Perm::identity(g.order()));
}

Table union_table(UnionSpec const& spec) {
  std::size_t const n1 = spec.q1.order(), n2 = spec.q2.order(), n = n1 + n2;
  if (spec.sigma.size() != n1 || spec.tau.size() != n2) {
    throw std::invalid_argument("sigma and tau need one map per element");
  }
  for (auto const& s : spec.sigma) {
    if (s.degree() != n2) throw std::invalid_argument("sigma entries must permute Q2");
  }
  for (auto const& t : spec.tau) {
    if (t.degree() != n1) throw std::invalid_argument("tau entries must permute Q1");
  }
  int const off = static_cast<int>(n1);
  Table t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int x = static_cast<int>(a), y = static_cast<int>(b);
      bool x1 = a < n1, y1 = b < n1;
      if (x1 && y1) {
        t[a][b] = spec.q1.op(x, y);
      } else if (!x1 && !y1) {
        t[a][b] = spec.q2.op(x - off, y - off) + off;
      } else if (x1) {
        t[a][b] = spec.tau[static_cast<std::size_t>(y - off)](x);
      } else {
        t[a][b] = spec.sigma[static_cast<std::size_t>(y)](x - off) + off;
      }
    }
  }
  return t;
}

ConditionWitness check_union_conditions(UnionSpec const& spec) {
  union_table(spec);  // shape checks
  int const m1 = static_cast<int>(spec.q1.order()), m2 = static_cast<int>(spec.q2.order());
  auto const& sigma = spec.sigma;
  auto const& tau = spec.tau;
  for (int x = 0; x < m1; ++x) {
    for (int y = 0; y < m1; ++y) {
      for (int z = 0; z < m2; ++z) {
        int lhs = spec.q1.op(tau[static_cast<std::size_t>(z)](x), y);
        int rhs = tau[static_cast<std::size_t>(sigma[static_cast<std::size_t>(y)](z))](spec.q1.op(x, y));
        if (lhs != rhs) return {1, x, y, z};
      }
    }
  }
  for (int x = 0; x < m2; ++x) {
    for (int y = 0; y < m2; ++y) {
      for (int z = 0; z < m1; ++z) {
        int lhs = spec.q2.op(sigma[static_cast<std::size_t>(z)](x), y);
        int rhs = sigma[static_cast<std::size_t>(tau[static_cast<std::size_t>(y)](z))](spec.q2.op(x, y));
        if (lhs != rhs) return {2, x, y, z};
      }
    }
  }
  return {};
}

Quandle union_quandle(UnionSpec const& spec) {
  std::size_t const n1 = spec.q1.order(), n2 = spec.q2.order();
  require_quandle_automorphisms(spec.q2, spec.sigma, n1, "sigma");
  require_quandle_automorphisms(spec.q1, spec.tau, n2, "tau");
  if (!conj_minus_one_hom(spec.q1, spec.sigma)) {
    throw SigmaNotHom("sigma is not a homomorphism into Conj_{-1}(Aut(Q2))");
  }
  if (!conj_minus_one_hom(spec.q2, spec.tau)) {
    throw TauNotHom("tau is not a homomorphism into Conj_{-1}(Aut(Q1))");
  }
  auto w = check_union_conditions(spec);
  if (w.condition == 1) throw Condition1Violated(w.x, w.y, w.z);
  if (w.condition == 2) throw Condition2Violated(w.x, w.y, w.z);
  return Quandle::from_table(union_table(spec));
}

UnionSpec involutory_double_spec(Quandle const& q) {
  if (!is_involutory(q)) {
    throw NotInvolutory("involutory doubling needs (x*y)*y = x for all pairs");
  }
  UnionSpec spec{q, q, {}, {}};
  for (std::size_t x = 0; x < q.order(); ++x) {
    spec.sigma.push_back(q.right_translation(static_cast<int>(x)));
  }
  spec.tau = spec.sigma;
  return spec;
}

Quandle involutory_double(Quandle const& q) {
  return union_quandle(involutory_double_spec(q));
}

}  // namespace quandlekit
