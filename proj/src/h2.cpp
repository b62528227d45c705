#include <numeric>
#include <set>
#include <stdexcept>

#include "quandlekit/cocycle.hpp"
#include "quandlekit/smith.hpp"

namespace quandlekit {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

struct CyclicH2 {
  std::vector<std::int64_t> orders;
  // Representative cocycle values on the off-diagonal pairs, one per order.
  std::vector<std::vector<std::int64_t>> representatives;
  std::size_t cocycle_count = 1;
};

// H^2(Q, Z_m). Unknowns are mu(x, y) for x != y in row-major order.
CyclicH2 cyclic_h2(Quandle const& q, std::int64_t m,
                   std::vector<std::pair<int, int>> const& pairs,
                   std::vector<int> const& var) {
  std::size_t const n = q.order(), nv = pairs.size();
  CyclicH2 out;
  if (nv == 0 || m == 1) {
    return out;
  }
  auto v = [&](int a, int b) { return var[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]; };

  std::set<std::vector<std::int64_t>> rows;
  int const k = static_cast<int>(n);
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      for (int z = 0; z < k; ++z) {
        std::vector<std::int64_t> row(nv, 0);
        auto bump = [&](int a, int b, int c) {
          if (v(a, b) >= 0) row[static_cast<std::size_t>(v(a, b))] += c;
        };
        bump(q.op(x, y), z, 1);
        bump(x, y, 1);
        bump(q.op(x, z), q.op(y, z), -1);
        bump(x, z, -1);
        bool zero = true;
        for (auto e : row) zero = zero && e == 0;
        if (!zero) rows.insert(std::move(row));
      }
    }
  }
  IntMatrix c(rows.begin(), rows.end());
  SmithForm snf = smith_normal_form(c, c.size(), nv);
  std::size_t const rank = snf.invariant_factors.size();

  // In coordinates w = V^-1 mu the cocycle condition reads d_i w_i = 0 mod m,
  // so w_i ranges over step_i * Z_m, a cyclic group of order m / step_i.
  std::vector<std::int64_t> step(nv, 1), cyc(nv, m);
  for (std::size_t i = 0; i < rank; ++i) {
    std::int64_t g = std::gcd(snf.invariant_factors[i], m);
    cyc[i] = g;
    step[i] = m / g;
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < nv; ++i) {
    if (cyc[i] > 1) {
      kept.push_back(i);
      out.cocycle_count = static_cast<std::size_t>(checked_mul(static_cast<std::int64_t>(out.cocycle_count), cyc[i]));
    }
  }
  if (kept.empty()) {
    return out;
  }

  // Coboundary of the indicator of each base element, in kept coordinates.
  std::size_t const kk = kept.size();
  IntMatrix rel;
  for (int e = 0; e < k; ++e) {
    std::vector<std::int64_t> b(nv, 0);
    for (std::size_t p = 0; p < nv; ++p) {
      auto [x, y] = pairs[p];
      b[p] = (x == e ? 1 : 0) - (q.op(x, y) == e ? 1 : 0);
    }
    std::vector<std::int64_t> row(kk, 0);
    for (std::size_t j = 0; j < kk; ++j) {
      std::size_t i = kept[j];
      std::int64_t w = 0;
      for (std::size_t p = 0; p < nv; ++p) {
        w = checked_add(w, checked_mul(snf.V_inverse[i][p], b[p]));
      }
      w = mod(w, m);
      if (w % step[i] != 0) {
        throw std::logic_error("coboundary is not a cocycle");
      }
      row[j] = (w / step[i]) % cyc[i];
    }
    rel.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < kk; ++j) {
    std::vector<std::int64_t> row(kk, 0);
    row[j] = cyc[kept[j]];
    rel.push_back(std::move(row));
  }
  SmithForm quo = smith_normal_form(rel, rel.size(), kk);
  if (quo.free_rank != 0) {
    throw std::logic_error("cohomology quotient has a free part");
  }
  for (std::size_t j = 0; j < quo.invariant_factors.size(); ++j) {
    std::int64_t d = quo.invariant_factors[j];
    if (d == 1) continue;
    // Generator j of the quotient is row j of V'^-1 in kept coordinates.
    std::vector<std::int64_t> mu(nv, 0);
    for (std::size_t jj = 0; jj < kk; ++jj) {
      std::size_t i = kept[jj];
      std::int64_t w = mod(checked_mul(quo.V_inverse[j][jj], step[i]), m);
      for (std::size_t p = 0; p < nv; ++p) {
        mu[p] = mod(checked_add(mu[p], checked_mul(snf.V[p][i], w)), m);
      }
    }
    out.orders.push_back(d);
    out.representatives.push_back(std::move(mu));
  }
  return out;
}

}  // namespace

H2Result compute_h2(Quandle const& q, std::vector<int> const& moduli, Caps const& caps) {
  if (q.order() > caps.quandle_order) {
    throw CapExceeded("quandle order for H^2", caps.quandle_order);
  }
  for (int m : moduli) {
    if (m < 1) throw UnsupportedSpec("coefficient moduli must be positive");
  }
  std::size_t const n = q.order();
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> var(n * n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) {
        var[x * n + y] = static_cast<int>(pairs.size());
        pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }
    }
  }
  H2Result r;
  Coefficients coeff{moduli};
  std::int64_t order = 1, cocycles = 1;
  for (std::size_t c = 0; c < moduli.size(); ++c) {
    CyclicH2 part = cyclic_h2(q, moduli[c], pairs, var);
    cocycles = checked_mul(cocycles, static_cast<std::int64_t>(part.cocycle_count));
    for (std::size_t g = 0; g < part.orders.size(); ++g) {
      order = checked_mul(order, part.orders[g]);
      r.cyclic_orders.push_back(part.orders[g]);
      AbelianCocycle mu{q, coeff,
                        std::vector<std::vector<std::vector<int>>>(
                            n, std::vector<std::vector<int>>(n, coeff.zero()))};
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [x, y] = pairs[p];
        mu.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)][c] =
            static_cast<int>(part.representatives[g][p]);
      }
      validate_abelian(mu);
      r.generators.push_back(std::move(mu));
    }
  }
  r.order = static_cast<std::size_t>(order);
  r.cocycle_count = static_cast<std::size_t>(cocycles);
  r.coboundary_count = r.cocycle_count / r.order;
  if (!r.cyclic_orders.empty()) {
    std::size_t const k = r.cyclic_orders.size();
    IntMatrix diag(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) diag[i][i] = r.cyclic_orders[i];
    for (auto d : smith_normal_form(diag, k, k).invariant_factors) {
      if (d > 1) r.invariant_factors.push_back(d);
    }
  }
  return r;
}

}  // namespace quandlekit
