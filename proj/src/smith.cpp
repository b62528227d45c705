#include "quandlekit/smith.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

#include "quandlekit/error.hpp"

namespace quandlekit {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ArithmeticOverflow("integer addition overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ArithmeticOverflow("integer multiplication overflow");
  }
  return r;
}

namespace {

std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) {
    throw ArithmeticOverflow("integer negation overflow");
  }
  return -a;
}

std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

// Row and column operations applied to the working matrix together with the
// transforms and their inverses.
class Reducer {
 public:
  Reducer(IntMatrix a, std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), a_(std::move(a)),
        u_(identity_matrix(rows)), ui_(identity_matrix(rows)),
        v_(identity_matrix(cols)), vi_(identity_matrix(cols)) {}

  // row[i] += c * row[j]
  void add_row(std::size_t i, std::size_t j, std::int64_t c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < n_; ++k) a_[i][k] = checked_add(a_[i][k], checked_mul(c, a_[j][k]));
    for (std::size_t k = 0; k < m_; ++k) u_[i][k] = checked_add(u_[i][k], checked_mul(c, u_[j][k]));
    // U^-1 <- U^-1 E^-1: column j -= c * column i.
    for (std::size_t k = 0; k < m_; ++k) ui_[k][j] = checked_add(ui_[k][j], checked_mul(checked_neg(c), ui_[k][i]));
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    std::swap(u_[i], u_[j]);
    for (std::size_t k = 0; k < m_; ++k) std::swap(ui_[k][i], ui_[k][j]);
  }
  void negate_row(std::size_t i) {
    for (auto& x : a_[i]) x = checked_neg(x);
    for (auto& x : u_[i]) x = checked_neg(x);
    for (std::size_t k = 0; k < m_; ++k) ui_[k][i] = checked_neg(ui_[k][i]);
  }
  // col[j] += c * col[i]
  void add_col(std::size_t j, std::size_t i, std::int64_t c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < m_; ++k) a_[k][j] = checked_add(a_[k][j], checked_mul(c, a_[k][i]));
    for (std::size_t k = 0; k < n_; ++k) v_[k][j] = checked_add(v_[k][j], checked_mul(c, v_[k][i]));
    // V^-1 <- E^-1 V^-1: row i -= c * row j.
    for (std::size_t k = 0; k < n_; ++k) vi_[i][k] = checked_add(vi_[i][k], checked_mul(checked_neg(c), vi_[j][k]));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m_; ++k) std::swap(a_[k][i], a_[k][j]);
    for (std::size_t k = 0; k < n_; ++k) std::swap(v_[k][i], v_[k][j]);
    std::swap(vi_[i], vi_[j]);
  }

  void reduce() {
    std::size_t const steps = std::min(m_, n_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!place_pivot(t)) {
        break;
      }
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (a_[i][t] != 0) {
            add_row(i, t, checked_neg(a_[i][t] / a_[t][t]));
            dirty = dirty || a_[i][t] != 0;
          }
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (a_[t][j] != 0) {
            add_col(j, t, checked_neg(a_[t][j] / a_[t][t]));
            dirty = dirty || a_[t][j] != 0;
          }
        }
        if (!dirty) {
          // Enforce divisibility of the remaining block by the pivot.
          std::size_t bad_row = m_;
          for (std::size_t i = t + 1; i < m_ && bad_row == m_; ++i) {
            for (std::size_t j = t + 1; j < n_; ++j) {
              if (a_[i][j] % a_[t][t] != 0) {
                bad_row = i;
                break;
              }
            }
          }
          if (bad_row == m_) {
            break;
          }
          add_row(t, bad_row, 1);
        }
        place_pivot(t);
      }
      if (a_[t][t] < 0) {
        negate_row(t);
      }
    }
  }

  SmithForm finish(IntMatrix const& original) {
    SmithForm s;
    std::size_t rank = 0;
    for (std::size_t t = 0; t < std::min(m_, n_); ++t) {
      if (a_[t][t] != 0) {
        s.invariant_factors.push_back(a_[t][t]);
        ++rank;
      }
    }
    s.free_rank = n_ - rank;
    if (multiply(multiply(u_, original, m_), v_, n_) != a_
        || multiply(u_, ui_, m_) != identity_matrix(m_)
        || multiply(v_, vi_, n_) != identity_matrix(n_)) {
      throw std::logic_error("Smith normal form certificate failed");
    }
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && a_[i][j] != 0) {
          throw std::logic_error("Smith normal form is not diagonal");
        }
      }
    }
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
      if (s.invariant_factors[i + 1] % s.invariant_factors[i] != 0) {
        throw std::logic_error("Smith normal form divisibility chain failed");
      }
    }
    s.D = std::move(a_);
    s.U = std::move(u_);
    s.V = std::move(v_);
    s.U_inverse = std::move(ui_);
    s.V_inverse = std::move(vi_);
    return s;
  }

 private:
  // Moves an entry of least absolute value in the block [t.., t..] to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = m_, bj = n_;
    std::int64_t best = 0;
    for (std::size_t i = t; i < m_; ++i) {
      for (std::size_t j = t; j < n_; ++j) {
        if (a_[i][j] != 0) {
          std::int64_t v = checked_abs(a_[i][j]);
          if (bi == m_ || v < best) {
            best = v;
            bi = i;
            bj = j;
          }
        }
      }
    }
    if (bi == m_) {
      return false;
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  std::size_t m_, n_;
  IntMatrix a_, u_, ui_, v_, vi_;
};

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix multiply(IntMatrix const& a, IntMatrix const& b, std::size_t inner) {
  std::size_t const cols = inner == 0 ? 0 : (b.empty() ? 0 : b[0].size());
  IntMatrix c(a.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
      }
    }
  }
  return c;
}

SmithForm smith_normal_form(IntMatrix const& a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows) {
    throw std::invalid_argument("matrix row count does not match shape");
  }
  for (auto const& r : a) {
    if (r.size() != cols) {
      throw std::invalid_argument("matrix rows must all have the declared width");
    }
  }
  Reducer red(a, rows, cols);
  red.reduce();
  return red.finish(a);
}

}  // namespace quandlekit
