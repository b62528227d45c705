#include "quandlekit/cocycle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace quandlekit {

namespace {

std::vector<Perm> all_perms(std::size_t s) {
  std::vector<Perm> out;
  std::vector<int> p(s);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Whether b^e <= cap, computed without overflow.
bool power_within(std::size_t b, std::size_t e, std::size_t cap) {
  std::size_t acc = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (b != 0 && acc > cap / b) {
      return false;
    }
    acc *= b;
  }
  return acc <= cap;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

ConstantCocycle validate_constant(Quandle const& base, std::size_t fiber_size,
                                  CocycleTable table) {
  std::size_t const n = base.order();
  if (table.size() != n) {
    throw std::invalid_argument("cocycle table must have one row per base element");
  }
  for (auto const& row : table) {
    if (row.size() != n) {
      throw std::invalid_argument("cocycle table must be square");
    }
    for (auto const& p : row) {
      if (p.degree() != fiber_size) {
        throw std::invalid_argument("cocycle entry has the wrong degree");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!table[x][x].is_identity()) {
      throw DiagonalViolation(static_cast<int>(x));
    }
  }
  int const m = static_cast<int>(n);
  auto at = [&](int a, int b) -> Perm const& {
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        if (at(base.op(x, y), z) * at(x, y)
            != at(base.op(x, z), base.op(y, z)) * at(x, z)) {
          throw CocycleViolation(x, y, z);
        }
      }
    }
  }
  ConstantCocycle c;
  c.base_ = base;
  c.fiber_ = fiber_size;
  c.table_ = std::move(table);
  return c;
}

ConstantCocycle trivial_cocycle(Quandle const& base, std::size_t fiber_size) {
  CocycleTable t(base.order(), std::vector<Perm>(base.order(), Perm::identity(fiber_size)));
  return validate_constant(base, fiber_size, std::move(t));
}

Quandle extend(ConstantCocycle const& alpha) {
  std::size_t const n = alpha.base().order(), s = alpha.fiber_size(), k = n * s;
  std::vector<int> flat(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 0; t < s; ++t) {
      std::size_t row = x * s + t;
      labels[row] = "(" + std::to_string(x) + "," + std::to_string(t) + ")";
      for (std::size_t y = 0; y < n; ++y) {
        int xy = alpha.base().op(static_cast<int>(x), static_cast<int>(y));
        int image = alpha.at(static_cast<int>(x), static_cast<int>(y))(static_cast<int>(t));
        for (std::size_t u = 0; u < s; ++u) {
          flat[row * k + y * s + u] = xy * static_cast<int>(s) + image;
        }
      }
    }
  }
  return Quandle::from_flat(k, std::move(flat), std::move(labels));
}

ConstantCocycle transport(ConstantCocycle const& alpha, LambdaMap const& lambda) {
  Quandle const& q = alpha.base();
  std::size_t const n = q.order();
  if (lambda.size() != n) {
    throw std::invalid_argument("lambda needs one permutation per base element");
  }
  CocycleTable t(n, std::vector<Perm>(n));
  for (int x = 0; x < static_cast<int>(n); ++x) {
    for (int y = 0; y < static_cast<int>(n); ++y) {
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          lambda[static_cast<std::size_t>(q.op(x, y))] * alpha.at(x, y)
          * lambda[static_cast<std::size_t>(x)].inverse();
    }
  }
  return validate_constant(q, alpha.fiber_size(), std::move(t));
}

std::optional<LambdaMap> are_cohomologous(ConstantCocycle const& alpha,
                                          ConstantCocycle const& beta,
                                          Caps const& caps) {
  if (!(alpha.base() == beta.base()) || alpha.fiber_size() != beta.fiber_size()) {
    throw std::invalid_argument("cocycles must share base and fiber");
  }
  Quandle const& q = alpha.base();
  std::size_t const n = q.order(), s = alpha.fiber_size();
  if (!power_within(factorial(s), n, caps.elements)) {
    throw CapExceeded("cohomologous search space (|S|!)^|Q|", caps.elements);
  }
  auto const perms = all_perms(s);
  using State = std::vector<std::optional<Perm>>;

  // Forces lambda(x*y) = beta(x,y) lambda(x) alpha(x,y)^-1 from each newly
  // fixed x.
  auto propagate = [&](State& st, int start) {
    std::vector<int> queue{start};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      Perm const lx = *st[static_cast<std::size_t>(x)];
      for (int y = 0; y < static_cast<int>(n); ++y) {
        Perm forced = beta.at(x, y) * lx * alpha.at(x, y).inverse();
        auto& slot = st[static_cast<std::size_t>(q.op(x, y))];
        if (slot) {
          if (*slot != forced) return false;
        } else {
          slot = std::move(forced);
          queue.push_back(q.op(x, y));
        }
      }
    }
    return true;
  };

  std::optional<LambdaMap> witness;
  std::function<void(State const&)> rec = [&](State const& st) {
    auto it = std::find_if(st.begin(), st.end(), [](auto const& p) { return !p; });
    if (it == st.end()) {
      LambdaMap lambda;
      for (auto const& p : st) lambda.push_back(*p);
      witness = std::move(lambda);
      return;
    }
    auto x = static_cast<int>(it - st.begin());
    for (auto const& p : perms) {
      State next = st;
      next[static_cast<std::size_t>(x)] = p;
      if (propagate(next, x)) {
        rec(next);
        if (witness) return;
      }
    }
  };
  rec(State(n));
  if (witness && !(transport(alpha, *witness) == beta)) {
    throw std::logic_error("cohomologous witness failed re-verification");
  }
  return witness;
}

Perm fiberwise_map(LambdaMap const& lambda, std::size_t fiber_size) {
  std::vector<int> images(lambda.size() * fiber_size);
  for (std::size_t x = 0; x < lambda.size(); ++x) {
    for (std::size_t t = 0; t < fiber_size; ++t) {
      images[x * fiber_size + t] =
          static_cast<int>(x * fiber_size) + lambda[x](static_cast<int>(t));
    }
  }
  return Perm(std::move(images));
}

ConstantCocycle act(Perm const& phi, Perm const& theta, ConstantCocycle const& alpha) {
  Quandle const& q = alpha.base();
  if (phi.degree() != q.order() || !is_automorphism(q, phi)) {
    throw NotAutomorphism("phi is not an automorphism of the base quandle");
  }
  if (theta.degree() != alpha.fiber_size()) {
    throw std::invalid_argument("theta must permute the fiber");
  }
  std::size_t const n = q.order();
  Perm const phi_inv = phi.inverse(), theta_inv = theta.inverse();
  CocycleTable t(n, std::vector<Perm>(n));
  for (int x = 0; x < static_cast<int>(n); ++x) {
    for (int y = 0; y < static_cast<int>(n); ++y) {
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          theta * alpha.at(phi_inv(x), phi_inv(y)) * theta_inv;
    }
  }
  return validate_constant(q, alpha.fiber_size(), std::move(t));
}

Perm pair_perm(Perm const& phi, Perm const& theta) {
  std::vector<int> images(phi.images());
  int const shift = static_cast<int>(phi.degree());
  for (int v : theta.images()) images.push_back(v + shift);
  return Perm(std::move(images));
}

std::pair<Perm, Perm> split_pair(Perm const& pair, std::size_t base_order) {
  auto const& im = pair.images();
  if (base_order > im.size()) {
    throw std::invalid_argument("pair permutation is shorter than the base");
  }
  std::vector<int> phi(im.begin(), im.begin() + static_cast<long>(base_order));
  std::vector<int> theta;
  for (std::size_t i = base_order; i < im.size(); ++i) {
    theta.push_back(im[i] - static_cast<int>(base_order));
  }
  return {Perm(std::move(phi)), Perm(std::move(theta))};
}

PermGroup aut_times_symmetric(Quandle const& base, std::size_t fiber_size,
                              Caps const& caps) {
  PermGroup a = aut(base, caps);
  if (!power_within(factorial(fiber_size), 1, caps.elements / std::max<std::size_t>(a.order(), 1))) {
    throw CapExceeded("|Aut(Q)| * |S|!", caps.elements);
  }
  auto sym = all_perms(fiber_size);
  std::vector<Perm> elements;
  for (auto const& phi : a.elements()) {
    for (auto const& theta : sym) {
      elements.push_back(pair_perm(phi, theta));
    }
  }
  std::vector<Perm> gens;
  Perm const id_q = Perm::identity(base.order()), id_s = Perm::identity(fiber_size);
  for (auto const& g : a.generators()) gens.push_back(pair_perm(g, id_s));
  if (fiber_size >= 2) {
    std::vector<int> swap(fiber_size), cycle(fiber_size);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < fiber_size; ++i) cycle[i] = static_cast<int>((i + 1) % fiber_size);
    gens.push_back(pair_perm(id_q, Perm(swap)));
    gens.push_back(pair_perm(id_q, Perm(cycle)));
  }
  return PermGroup::from_elements(base.order() + fiber_size, std::move(elements),
                                  std::move(gens), false);
}

PermGroup cocycle_stabilizer(ConstantCocycle const& alpha, Caps const& caps) {
  std::size_t const n = alpha.base().order();
  PermGroup g = aut_times_symmetric(alpha.base(), alpha.fiber_size(), caps);
  auto action = [n](Perm const& p, ConstantCocycle const& a) {
    auto [phi, theta] = split_pair(p, n);
    return act(phi, theta, a);
  };
  auto elements = stabilizer(g, action, alpha);
  return PermGroup::from_elements(g.degree(), std::move(elements), {}, false);
}

Perm product_map(Perm const& phi, Perm const& theta) {
  std::size_t const n = phi.degree(), s = theta.degree();
  std::vector<int> images(n * s);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 0; t < s; ++t) {
      images[x * s + t] = phi(static_cast<int>(x)) * static_cast<int>(s)
                          + theta(static_cast<int>(t));
    }
  }
  return Perm(std::move(images));
}

Perm embed(Perm const& phi, Perm const& theta, ConstantCocycle const& alpha) {
  if (phi.degree() != alpha.base().order() || !is_automorphism(alpha.base(), phi)
      || !(act(phi, theta, alpha) == alpha)) {
    throw NotInStabilizer("pair does not stabilize the cocycle");
  }
  Perm gamma = product_map(phi, theta);
  if (!is_automorphism(extend(alpha), gamma)) {
    throw std::logic_error("embedded pair is not an automorphism of the extension");
  }
  return gamma;
}

std::vector<ConstantCocycle> enumerate_constant_cocycles(Quandle const& base,
                                                         std::size_t fiber_size,
                                                         Caps const& caps) {
  std::size_t const n = base.order();
  std::size_t const slots = n * n - n;
  if (!power_within(factorial(fiber_size), slots, caps.elements)) {
    throw CapExceeded("cocycle search space (|S|!)^(|Q|^2-|Q|)", caps.elements);
  }
  auto const perms = all_perms(fiber_size);
  // Off-diagonal pairs in row-major order; diagonal entries are pinned.
  std::vector<int> slot_of(n * n, -1);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) slot_of[x * n + y] = static_cast<int>(next++);
    }
  }
  // Each triple is checked once all of its entries have been chosen.
  std::vector<std::vector<std::array<int, 3>>> due(slots + 1);
  int const m = static_cast<int>(n);
  auto pos = [&](int a, int b) { return slot_of[static_cast<std::size_t>(a * m + b)]; };
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        int last = std::max({pos(base.op(x, y), z), pos(x, y),
                             pos(base.op(x, z), base.op(y, z)), pos(x, z)});
        due[static_cast<std::size_t>(last + 1)].push_back({x, y, z});
      }
    }
  }
  CocycleTable table(n, std::vector<Perm>(n, Perm::identity(fiber_size)));
  auto at = [&](int a, int b) -> Perm const& {
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  auto ok = [&](std::size_t level) {
    for (auto const& [x, y, z] : due[level]) {
      if (at(base.op(x, y), z) * at(x, y) != at(base.op(x, z), base.op(y, z)) * at(x, z)) {
        return false;
      }
    }
    return true;
  };
  std::vector<std::pair<int, int>> coords;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x != y) coords.emplace_back(x, y);
    }
  }
  std::vector<ConstantCocycle> out;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == slots) {
      out.push_back(validate_constant(base, fiber_size, table));
      return;
    }
    auto [x, y] = coords[level];
    for (auto const& p : perms) {
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = p;
      if (ok(level + 1)) rec(level + 1);
    }
    table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = Perm::identity(fiber_size);
  };
  if (ok(0)) rec(0);
  return out;
}

std::vector<ConstantCocycle> cohomology_classes(Quandle const& base,
                                                std::size_t fiber_size,
                                                Caps const& caps) {
  if (!power_within(factorial(fiber_size), base.order(), caps.elements)) {
    throw CapExceeded("cohomology class search (|S|!)^|Q|", caps.elements);
  }
  std::vector<ConstantCocycle> reps;
  for (auto& c : enumerate_constant_cocycles(base, fiber_size, caps)) {
    bool fresh = std::none_of(reps.begin(), reps.end(), [&](ConstantCocycle const& r) {
      return are_cohomologous(r, c, caps).has_value();
    });
    if (fresh) reps.push_back(std::move(c));
  }
  return reps;
}

std::size_t Coefficients::order() const {
  std::size_t k = 1;
  for (int m : moduli) k *= static_cast<std::size_t>(m);
  return k;
}

std::vector<int> Coefficients::element(std::size_t index) const {
  std::vector<int> e(moduli.size());
  for (std::size_t i = moduli.size(); i-- > 0;) {
    e[i] = static_cast<int>(index % static_cast<std::size_t>(moduli[i]));
    index /= static_cast<std::size_t>(moduli[i]);
  }
  return e;
}

std::size_t Coefficients::index(std::vector<int> const& e) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    idx = idx * static_cast<std::size_t>(moduli[i]) + static_cast<std::size_t>(e[i]);
  }
  return idx;
}

std::vector<int> Coefficients::add(std::vector<int> const& a, std::vector<int> const& b) const {
  std::vector<int> c(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) c[i] = (a[i] + b[i]) % moduli[i];
  return c;
}

void validate_abelian(AbelianCocycle const& mu) {
  std::size_t const n = mu.base.order();
  auto const& A = mu.coefficients;
  for (int m : A.moduli) {
    if (m < 1) throw std::invalid_argument("coefficient moduli must be positive");
  }
  if (mu.table.size() != n) {
    throw std::invalid_argument("abelian cocycle needs one row per base element");
  }
  for (auto const& row : mu.table) {
    if (row.size() != n) throw std::invalid_argument("abelian cocycle table must be square");
    for (auto const& v : row) {
      if (v.size() != A.moduli.size()) {
        throw std::invalid_argument("coefficient tuple has the wrong length");
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= A.moduli[i]) {
          throw std::invalid_argument("coefficient entry out of range");
        }
      }
    }
  }
  auto at = [&](int a, int b) -> std::vector<int> const& {
    return mu.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  int const m = static_cast<int>(n);
  for (int x = 0; x < m; ++x) {
    if (at(x, x) != A.zero()) throw DiagonalViolation(x);
  }
  Quandle const& q = mu.base;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        if (A.add(at(q.op(x, y), z), at(x, y)) != A.add(at(q.op(x, z), q.op(y, z)), at(x, z))) {
          throw CocycleViolation(x, y, z);
        }
      }
    }
  }
}

ConstantCocycle abelian_to_constant(AbelianCocycle const& mu) {
  auto const& A = mu.coefficients;
  std::size_t const k = A.order(), n = mu.base.order();
  CocycleTable t(n, std::vector<Perm>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<int> images(k);
      for (std::size_t b = 0; b < k; ++b) {
        images[b] = static_cast<int>(A.index(A.add(A.element(b), mu.table[x][y])));
      }
      t[x][y] = Perm(std::move(images));
    }
  }
  return validate_constant(mu.base, k, std::move(t));
}

Quandle abelian_extension(AbelianCocycle const& mu) {
  auto const& A = mu.coefficients;
  std::size_t const s = A.order(), n = mu.base.order(), k = n * s;
  std::vector<int> flat(k * k);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < s; ++a) {
      auto ea = A.element(a);
      for (std::size_t y = 0; y < n; ++y) {
        int xy = mu.base.op(static_cast<int>(x), static_cast<int>(y));
        auto sum = static_cast<int>(A.index(A.add(ea, mu.table[x][y])));
        for (std::size_t b = 0; b < s; ++b) {
          flat[(x * s + a) * k + y * s + b] = xy * static_cast<int>(s) + sum;
        }
      }
    }
  }
  return Quandle::from_flat(k, std::move(flat));
}

}  // namespace quandlekit
