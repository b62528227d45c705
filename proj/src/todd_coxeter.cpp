#include <algorithm>
#include <stdexcept>

#include "quandlekit/envgroup.hpp"

namespace quandlekit {

namespace {

int column_of(Letter const& l) { return 2 * l.gen + (l.inverse ? 1 : 0); }

// Coset table with union-find coincidence handling. Dead cosets keep their
// rows until compaction; parent_[c] == c marks a live coset.
class Enumerator {
 public:
  Enumerator(std::size_t ngens, std::size_t max_cosets)
      : width_(2 * ngens), max_live_(max_cosets),
        // Dead rows are never reused, so total allocation gets a looser bound.
        max_total_(max_cosets * 16 + 16) {
    new_coset();
  }

  enum class Scan { Done, NeedDefinition };

  std::size_t live() const { return live_; }
  std::size_t allocated() const { return parent_.size(); }
  bool is_live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  bool has_room() const { return live_ < max_live_ && parent_.size() < max_total_; }

  // Scans w from coset c in both directions, filling a single gap by a
  // deduction. With `fill`, a longer gap gets one new coset and the scan
  // repeats; without room it reports NeedDefinition.
  Scan scan(int c, std::vector<int> const& w, bool fill) {
    while (true) {
      if (!is_live(c)) {
        return Scan::Done;
      }
      int f = c, b = c;
      std::size_t i = 0;
      std::size_t j = w.size();
      while (i < j && at(f, w[i]) >= 0) {
        f = at(f, w[i]);
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return Scan::Done;
      }
      while (j > i && at(b, w[j - 1] ^ 1) >= 0) {
        b = at(b, w[j - 1] ^ 1);
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return Scan::Done;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        deductions_.push_back({f, w[i]});
        return Scan::Done;
      }
      if (!fill) {
        return Scan::Done;
      }
      if (!has_room()) {
        return Scan::NeedDefinition;
      }
      define(f, w[i]);
    }
  }

  void define(int c, int col) {
    int d = new_coset();
    set(c, col, d);
    deductions_.push_back({c, col});
  }

  int at(int c, int col) const {
    return rows_[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
  }

  // Scans every relator at the cosets touched by pending deductions.
  void process_deductions(std::vector<std::vector<int>> const& relators) {
    std::size_t budget = 4 * max_live_;
    while (!deductions_.empty()) {
      if (budget-- == 0) {
        deductions_.clear();
        return;
      }
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      int d = is_live(c) ? at(c, col) : -1;
      for (auto const& r : relators) {
        scan(rep(c), r, false);
        if (d >= 0) scan(rep(d), r, false);
      }
    }
  }

  void lookahead(std::vector<std::vector<int>> const& relators) {
    deductions_.clear();
    for (int c = 0; c < static_cast<int>(allocated()); ++c) {
      for (auto const& r : relators) {
        if (!is_live(c)) break;
        scan(c, r, false);
      }
    }
    deductions_.clear();
  }

  std::vector<std::vector<int>> compact() const {
    std::vector<int> renumber(parent_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (parent_[c] == static_cast<int>(c)) {
        renumber[c] = next++;
      }
    }
    std::vector<std::vector<int>> out;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (renumber[c] < 0) continue;
      std::vector<int> row(width_);
      for (std::size_t x = 0; x < width_; ++x) {
        int t = rows_[c][x];
        if (t < 0 || parent_[static_cast<std::size_t>(t)] != t) {
          throw std::logic_error("coset table incomplete after enumeration");
        }
        row[x] = renumber[static_cast<std::size_t>(t)];
      }
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  int new_coset() {
    int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    rows_.emplace_back(width_, -1);
    ++live_;
    return c;
  }

  void set(int c, int col, int d) {
    rows_[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)] = d;
    rows_[static_cast<std::size_t>(d)][static_cast<std::size_t>(col ^ 1)] = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    int x = rep(a), y = rep(b);
    if (x == y) return;
    int lo = std::min(x, y), hi = std::max(x, y);
    parent_[static_cast<std::size_t>(hi)] = lo;
    --live_;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int g = queue[qi];
      for (int x = 0; x < static_cast<int>(width_); ++x) {
        int d = at(g, x);
        if (d < 0) continue;
        rows_[static_cast<std::size_t>(d)][static_cast<std::size_t>(x ^ 1)] = -1;
        int mu = rep(g), nu = rep(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1) >= 0) {
          merge(mu, at(nu, x ^ 1), queue);
        } else {
          set(mu, x, nu);
        }
      }
    }
  }

  std::size_t width_;
  std::size_t max_live_;
  std::size_t max_total_;
  std::size_t live_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> deductions_;
};

std::vector<int> columns(Word const& w) {
  std::vector<int> out;
  for (auto const& l : free_reduce(w)) out.push_back(column_of(l));
  return out;
}

int trace(std::vector<std::vector<int>> const& table, int c, std::vector<int> const& w) {
  for (int col : w) c = table[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
  return c;
}

}  // namespace

CosetTable enumerate_cosets(Presentation const& p, std::vector<Word> const& subgroup,
                            CosetOptions const& options) {
  p.validate();
  Presentation{p.ngens, subgroup}.validate();
  if (options.max_cosets < 1) {
    throw std::invalid_argument("max_cosets must be at least 1");
  }
  std::vector<std::vector<int>> rels, subs;
  for (auto const& r : p.relators) {
    auto c = columns(r);
    if (!c.empty()) rels.push_back(std::move(c));
  }
  for (auto const& s : subgroup) {
    auto c = columns(s);
    if (!c.empty()) subs.push_back(std::move(c));
  }
  if (options.reverse_order) {
    std::reverse(rels.begin(), rels.end());
    std::reverse(subs.begin(), subs.end());
  }

  Enumerator e(p.ngens, options.max_cosets);
  int const width = static_cast<int>(2 * p.ngens);

  // Runs `step` until it stops asking for room, looking ahead in between.
  auto with_room = [&](auto&& step) {
    while (!step()) {
      e.lookahead(rels);
      if (!e.has_room()) {
        throw CosetLimitExceeded(options.max_cosets);
      }
    }
  };

  for (auto const& s : subs) {
    with_room([&] { return e.scan(0, s, true) == Enumerator::Scan::Done; });
    e.process_deductions(rels);
  }
  for (int c = 0; c < static_cast<int>(e.allocated()); ++c) {
    for (auto const& r : rels) {
      if (!e.is_live(c)) break;
      with_room([&] { return e.scan(c, r, true) == Enumerator::Scan::Done; });
    }
    for (int x = 0; x < width && e.is_live(c); ++x) {
      if (e.at(c, x) < 0) {
        with_room([&] {
          if (!e.is_live(c) || e.at(c, x) >= 0) return true;
          if (!e.has_room()) return false;
          e.define(c, x);
          return true;
        });
      }
    }
    e.process_deductions(rels);
  }

  CosetTable out;
  out.table = e.compact();
  out.index = out.table.size();
  for (std::size_t c = 0; c < out.index; ++c) {
    for (auto const& r : rels) {
      if (trace(out.table, static_cast<int>(c), r) != static_cast<int>(c)) {
        throw std::logic_error("coset table violates a relator");
      }
    }
  }
  for (auto const& s : subs) {
    if (trace(out.table, 0, s) != 0) {
      throw std::logic_error("coset table does not fix the subgroup coset");
    }
  }
  return out;
}

std::size_t todd_coxeter(Presentation const& p, std::vector<Word> const& subgroup,
                         CosetOptions const& options) {
  return enumerate_cosets(p, subgroup, options).index;
}

}  // namespace quandlekit
