#include <algorithm>
#include <numeric>

#include "quandlekit/quandle.hpp"

namespace quandlekit {

namespace {

using Column = std::vector<int>;

// Column k of the quandle transported by pi is pi S_{pi^-1 k} pi^-1.
// Compares it entrywise with `cols[k]`: negative when the relabeled column is
// smaller, positive when larger, zero when equal.
int compare_relabeled_column(std::vector<Column> const& cols,
                             std::vector<int> const& pi,
                             std::vector<int> const& pi_inv, std::size_t k) {
  Column const& src = cols[static_cast<std::size_t>(pi_inv[k])];
  Column const& ref = cols[k];
  for (std::size_t i = 0; i < ref.size(); ++i) {
    int v = pi[static_cast<std::size_t>(src[static_cast<std::size_t>(pi_inv[i])])];
    if (v != ref[i]) {
      return v < ref[i] ? -1 : 1;
    }
  }
  return 0;
}

struct Relabeling {
  std::vector<int> pi;
  std::vector<int> pi_inv;
};

std::vector<Relabeling> all_relabelings(std::size_t n) {
  std::vector<Relabeling> result;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    Relabeling r{p, std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      r.pi_inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    }
    result.push_back(std::move(r));
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

class Enumerator {
 public:
  explicit Enumerator(std::size_t n)
      : n_(n), relabelings_(all_relabelings(n)) {}

  std::vector<Quandle> run() {
    std::vector<Column> cols(n_);
    std::vector<char> set(n_, 0);
    search(cols, set);
    std::sort(found_.begin(), found_.end());
    std::vector<Quandle> result;
    for (auto const& c : found_) {
      result.push_back(from_columns(c));
    }
    return result;
  }

  Quandle from_columns(std::vector<Column> const& cols) const {
    std::vector<int> flat(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        flat[x * n_ + y] = cols[y][x];
      }
    }
    return Quandle::from_flat(n_, std::move(flat));
  }

 private:
  // Closes the assignment under S_{S_b(a)} = S_b S_a S_b^-1. Returns false
  // on a conflict with an existing column.
  bool propagate(std::vector<Column>& cols, std::vector<char>& set,
                 std::vector<int> queue) const {
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int fresh = queue[qi];
      for (std::size_t other = 0; other < n_; ++other) {
        if (!set[other]) {
          continue;
        }
        int pair[2][2] = {{fresh, static_cast<int>(other)}, {static_cast<int>(other), fresh}};
        for (auto const& ab : pair) {
          Column const& sa = cols[static_cast<std::size_t>(ab[0])];
          Column const& sb = cols[static_cast<std::size_t>(ab[1])];
          Column conj(n_);
          for (std::size_t i = 0; i < n_; ++i) {
            conj[static_cast<std::size_t>(sb[i])] = sb[static_cast<std::size_t>(sa[i])];
          }
          auto target = static_cast<std::size_t>(sb[static_cast<std::size_t>(ab[0])]);
          if (set[target]) {
            if (cols[target] != conj) {
              return false;
            }
          } else {
            cols[target] = std::move(conj);
            set[target] = 1;
            queue.push_back(static_cast<int>(target));
          }
        }
      }
    }
    return true;
  }

  // True when some relabeling is already known to give a smaller column
  // sequence, judged on the leading run of assigned columns.
  bool dominated(std::vector<Column> const& cols, std::vector<char> const& set) const {
    std::size_t prefix = 0;
    while (prefix < n_ && set[prefix]) {
      ++prefix;
    }
    for (auto const& r : relabelings_) {
      for (std::size_t k = 0; k < prefix; ++k) {
        if (!set[static_cast<std::size_t>(r.pi_inv[k])]) {
          break;
        }
        int c = compare_relabeled_column(cols, r.pi, r.pi_inv, k);
        if (c < 0) {
          return true;
        }
        if (c > 0) {
          break;
        }
      }
    }
    return false;
  }

  void search(std::vector<Column>& cols, std::vector<char>& set) {
    auto next = std::find(set.begin(), set.end(), 0);
    if (next == set.end()) {
      found_.push_back(cols);
      return;
    }
    auto y = static_cast<std::size_t>(next - set.begin());
    // Candidate columns: permutations fixing y, in lexicographic order.
    std::vector<int> rest;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i != y) rest.push_back(static_cast<int>(i));
    }
    do {
      Column c(n_);
      std::size_t j = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        c[i] = i == y ? static_cast<int>(y) : rest[j++];
      }
      auto cols2 = cols;
      auto set2 = set;
      cols2[y] = std::move(c);
      set2[y] = 1;
      if (propagate(cols2, set2, {static_cast<int>(y)}) && !dominated(cols2, set2)) {
        search(cols2, set2);
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  std::size_t n_;
  std::vector<Relabeling> relabelings_;
  std::vector<std::vector<Column>> found_;
};

std::vector<Column> columns_of(Quandle const& q) {
  std::vector<Column> cols;
  for (std::size_t y = 0; y < q.order(); ++y) {
    cols.push_back(q.right_translation(static_cast<int>(y)).images());
  }
  return cols;
}

}  // namespace

std::vector<Quandle> enumerate_quandles(std::size_t n, Caps const& caps) {
  if (n > caps.quandle_order) {
    throw CapExceeded("quandle order for enumeration", caps.quandle_order);
  }
  if (n == 0) {
    return {};
  }
  return Enumerator(n).run();
}

Quandle canonical_form(Quandle const& q) {
  std::size_t const n = q.order();
  auto cols = columns_of(q);
  std::vector<Column> best = cols;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    std::vector<int> pi_inv(n);
    for (std::size_t i = 0; i < n; ++i) {
      pi_inv[static_cast<std::size_t>(pi[i])] = static_cast<int>(i);
    }
    std::vector<Column> moved(n, Column(n));
    for (std::size_t k = 0; k < n; ++k) {
      Column const& src = cols[static_cast<std::size_t>(pi_inv[k])];
      for (std::size_t i = 0; i < n; ++i) {
        moved[k][i] = pi[static_cast<std::size_t>(src[static_cast<std::size_t>(pi_inv[i])])];
      }
    }
    if (moved < best) {
      best = std::move(moved);
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  std::vector<int> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      flat[x * n + y] = best[y][x];
    }
  }
  return Quandle::from_flat(n, std::move(flat));
}

}  // namespace quandlekit
