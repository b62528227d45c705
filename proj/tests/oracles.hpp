#ifndef QUANDLEKIT_TESTS_ORACLES_HPP_
#define QUANDLEKIT_TESTS_ORACLES_HPP_

// Slow, independent reference computations. They share no code with the
// library beyond Perm and Quandle accessors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "quandlekit/quandle.hpp"

namespace oracle {

// Row-major tables of every quandle on {0..n-1}: each column is a
// permutation fixing its own index, then the distributive law is checked.
inline std::vector<std::vector<int>> all_quandle_tables(int n) {
  std::vector<std::vector<int>> columns_by_y[8];
  for (int y = 0; y < n; ++y) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      if (p[static_cast<std::size_t>(y)] == y) columns_by_y[y].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::vector<int>> result;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  auto at = [n](std::vector<int> const& t, int x, int y) {
    return t[static_cast<std::size_t>(x * n + y)];
  };
  while (true) {
    std::vector<int> t(static_cast<std::size_t>(n * n));
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        t[static_cast<std::size_t>(x * n + y)] = columns_by_y[y][pick[static_cast<std::size_t>(y)]][static_cast<std::size_t>(x)];
      }
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        for (int z = 0; z < n && ok; ++z) {
          ok = at(t, at(t, x, y), z) == at(t, at(t, x, z), at(t, y, z));
        }
      }
    }
    if (ok) result.push_back(t);
    int k = 0;
    while (k < n && ++pick[static_cast<std::size_t>(k)] == columns_by_y[k].size()) {
      pick[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return result;
}

// Smallest row-major table over all relabelings.
inline std::vector<int> min_relabeling(std::vector<int> const& t, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> r(t.size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        r[static_cast<std::size_t>(p[static_cast<std::size_t>(x)] * n + p[static_cast<std::size_t>(y)])] =
            p[static_cast<std::size_t>(t[static_cast<std::size_t>(x * n + y)])];
      }
    }
    if (best.empty() || r < best) best = std::move(r);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::set<std::vector<int>> quandle_classes(int n) {
  std::set<std::vector<int>> classes;
  for (auto const& t : all_quandle_tables(n)) classes.insert(min_relabeling(t, n));
  return classes;
}

// H^2(Q, Z_m) by listing every cocycle and every coboundary.
struct H2Oracle {
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  // killed[d] = number of classes c with d*c = 0, for d = 1..|H^2|.
  std::map<std::size_t, std::size_t> killed;
  std::size_t order() const { return coboundaries == 0 ? 0 : cocycles / coboundaries; }
};

inline H2Oracle brute_force_h2(quandlekit::Quandle const& q, int m) {
  int const n = static_cast<int>(q.order());
  std::vector<std::pair<int, int>> off_diagonal;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) off_diagonal.emplace_back(x, y);
    }
  }
  auto idx = [n](int x, int y) { return static_cast<std::size_t>(x * n + y); };
  auto is_cocycle = [&](std::vector<int> const& mu) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          int lhs = mu[idx(q.op(x, y), z)] + mu[idx(x, y)];
          int rhs = mu[idx(q.op(x, z), q.op(y, z))] + mu[idx(x, z)];
          if ((lhs - rhs) % m != 0) return false;
        }
      }
    }
    return true;
  };
  std::vector<std::vector<int>> z2;
  std::vector<int> digits(off_diagonal.size(), 0);
  while (true) {
    std::vector<int> mu(static_cast<std::size_t>(n * n), 0);
    for (std::size_t k = 0; k < off_diagonal.size(); ++k) {
      mu[idx(off_diagonal[k].first, off_diagonal[k].second)] = digits[k];
    }
    if (is_cocycle(mu)) z2.push_back(mu);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == m) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  std::set<std::vector<int>> b2;
  std::vector<int> lambda(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> mu(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int v = lambda[static_cast<std::size_t>(x)] - lambda[static_cast<std::size_t>(q.op(x, y))];
        mu[idx(x, y)] = ((v % m) + m) % m;
      }
    }
    b2.insert(mu);
    std::size_t k = 0;
    while (k < lambda.size() && ++lambda[k] == m) lambda[k++] = 0;
    if (k == lambda.size()) break;
  }
  H2Oracle out;
  out.cocycles = z2.size();
  out.coboundaries = b2.size();
  std::size_t const h = out.order();
  for (std::size_t d = 1; d <= h; ++d) {
    std::size_t hits = 0;
    for (auto const& mu : z2) {
      std::vector<int> scaled(mu.size());
      for (std::size_t i = 0; i < mu.size(); ++i) {
        scaled[i] = static_cast<int>((static_cast<std::size_t>(mu[i]) * d) % static_cast<std::size_t>(m));
      }
      hits += b2.count(scaled);
    }
    out.killed[d] = hits / out.coboundaries;
  }
  return out;
}

// The same counts for Z_{f_1} + ... + Z_{f_r}.
inline std::map<std::size_t, std::size_t> killed_counts(std::vector<std::int64_t> const& factors) {
  std::size_t h = 1;
  for (auto f : factors) h *= static_cast<std::size_t>(f);
  std::map<std::size_t, std::size_t> out;
  for (std::size_t d = 1; d <= h; ++d) {
    std::size_t c = 1;
    for (auto f : factors) c *= std::gcd(d, static_cast<std::size_t>(f));
    out[d] = c;
  }
  return out;
}

}  // namespace oracle

#endif  // QUANDLEKIT_TESTS_ORACLES_HPP_
