#include "quandlekit/quandle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace quandlekit {

void validate_quandle_table(std::size_t n, std::vector<int> const& t) {
  if (t.size() != n * n) {
    throw InvalidTable("quandle table is not square");
  }
  for (int v : t) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw InvalidTable("quandle table entry out of range");
    }
  }
  auto at = [&](int x, int y) {
    return t[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)];
  };
  int const m = static_cast<int>(n);
  for (int x = 0; x < m; ++x) {
    if (at(x, x) != x) {
      throw Axiom1Violation(x);
    }
  }
  for (int y = 0; y < m; ++y) {
    std::vector<bool> seen(n, false);
    for (int x = 0; x < m; ++x) {
      auto v = static_cast<std::size_t>(at(x, y));
      if (seen[v]) {
        throw Axiom2Violation(y);
      }
      seen[v] = true;
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        if (at(at(x, y), z) != at(at(x, z), at(y, z))) {
          throw Axiom3Violation(x, y, z);
        }
      }
    }
  }
}

Quandle Quandle::from_flat(std::size_t order, std::vector<int> flat,
                           std::vector<std::string> labels) {
  validate_quandle_table(order, flat);
  if (!labels.empty() && labels.size() != order) {
    throw InvalidTable("label count does not match quandle order");
  }
  Quandle q;
  q.order_ = order;
  q.flat_ = std::move(flat);
  q.labels_ = std::move(labels);
  return q;
}

Quandle Quandle::from_table(Table const& table, std::vector<std::string> labels) {
  std::size_t n = table.size();
  std::vector<int> flat;
  flat.reserve(n * n);
  for (auto const& row : table) {
    if (row.size() != n) {
      throw InvalidTable("quandle table is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat(n, std::move(flat), std::move(labels));
}

Perm Quandle::right_translation(int y) const {
  std::vector<int> images(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    images[x] = op(static_cast<int>(x), y);
  }
  return Perm(std::move(images));
}

Table Quandle::rows() const {
  Table t(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    t[x].assign(flat_.begin() + static_cast<long>(x * order_),
                flat_.begin() + static_cast<long>((x + 1) * order_));
  }
  return t;
}

bool is_homomorphism(Quandle const& source, Quandle const& target,
                     std::vector<int> const& f) {
  if (f.size() != source.order()) {
    return false;
  }
  for (int v : f) {
    if (v < 0 || static_cast<std::size_t>(v) >= target.order()) {
      return false;
    }
  }
  int const n = static_cast<int>(source.order());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (f[static_cast<std::size_t>(source.op(x, y))]
          != target.op(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  return true;
}

bool is_automorphism(Quandle const& q, Perm const& phi) {
  return phi.degree() == q.order() && is_homomorphism(q, q, phi.images());
}

QuandleMap::QuandleMap(Quandle const& source, Quandle const& target,
                       std::vector<int> images)
    : source_order_(source.order()),
      target_order_(target.order()),
      images_(std::move(images)) {
  if (!is_homomorphism(source, target, images_)) {
    throw NotAHomomorphism("map does not preserve the quandle operation");
  }
}

bool QuandleMap::is_bijective() const {
  if (source_order_ != target_order_) {
    return false;
  }
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Quandle trivial_quandle(std::size_t n) {
  std::vector<int> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill_n(flat.begin() + static_cast<long>(x * n), n, static_cast<int>(x));
  }
  return Quandle::from_flat(n, std::move(flat));
}

Quandle dihedral_quandle(std::size_t n) {
  std::vector<int> flat(n * n);
  long const m = static_cast<long>(n);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < m; ++j) {
      flat[static_cast<std::size_t>(i * m + j)] =
          static_cast<int>((((2 * j - i) % m) + m) % m);
    }
  }
  return Quandle::from_flat(n, std::move(flat));
}

Quandle relabel(Quandle const& q, Perm const& r) {
  std::size_t n = q.order();
  std::vector<int> flat(n * n);
  for (int x = 0; x < static_cast<int>(n); ++x) {
    for (int y = 0; y < static_cast<int>(n); ++y) {
      flat[static_cast<std::size_t>(r(x)) * n + static_cast<std::size_t>(r(y))] =
          r(q.op(x, y));
    }
  }
  return Quandle::from_flat(n, std::move(flat));
}

std::optional<Quandle> subquandle(Quandle const& q, std::vector<int> const& subset) {
  std::vector<int> pos(q.order(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    pos[static_cast<std::size_t>(subset[i])] = static_cast<int>(i);
  }
  std::size_t k = subset.size();
  std::vector<int> flat(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      int v = pos[static_cast<std::size_t>(q.op(subset[i], subset[j]))];
      if (v < 0) {
        return std::nullopt;
      }
      flat[i * k + j] = v;
    }
  }
  return Quandle::from_flat(k, std::move(flat));
}

std::vector<int> center(Quandle const& q) {
  std::vector<int> result;
  int const n = static_cast<int>(q.order());
  for (int x = 0; x < n; ++x) {
    bool fixed = true;
    for (int y = 0; y < n && fixed; ++y) {
      fixed = q.op(x, y) == x;
    }
    if (fixed) {
      result.push_back(x);
    }
  }
  return result;
}

std::vector<InnerGenerator> inner_generators(Quandle const& q) {
  std::vector<InnerGenerator> result;
  for (int y = 0; y < static_cast<int>(q.order()); ++y) {
    Perm s = q.right_translation(y);
    bool fresh = std::none_of(result.begin(), result.end(),
                              [&](InnerGenerator const& g) { return g.translation == s; });
    if (fresh) {
      result.push_back({y, std::move(s)});
    }
  }
  return result;
}

namespace {

std::vector<Perm> translations_of(Quandle const& q) {
  std::vector<Perm> gens;
  for (auto& g : inner_generators(q)) {
    gens.push_back(std::move(g.translation));
  }
  return gens;
}

// Data preserved by every isomorphism: how many y move x, and the cycle type
// of S_x (conjugation by an isomorphism carries S_x to S_{f(x)}).
using Signature = std::pair<std::size_t, std::vector<std::size_t>>;

std::vector<Signature> signatures(Quandle const& q) {
  std::vector<Signature> sig;
  int const n = static_cast<int>(q.order());
  for (int x = 0; x < n; ++x) {
    std::size_t moved = 0;
    for (int y = 0; y < n; ++y) {
      moved += q.op(x, y) != x ? 1 : 0;
    }
    sig.emplace_back(moved, q.right_translation(x).cycle_type());
  }
  return sig;
}

// Backtracking search for bijective homomorphisms a -> b. Assigning one image
// forces images of every product of assigned elements, so most of the table
// is determined by propagation.
class IsoSearch {
 public:
  IsoSearch(Quandle const& a, Quandle const& b)
      : a_(a), b_(b), n_(a.order()), sig_a_(signatures(a)), sig_b_(signatures(b)) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return sig_a_[static_cast<std::size_t>(x)].first
             > sig_a_[static_cast<std::size_t>(y)].first;
    });
  }

  // Calls visit(images) for each isomorphism until it returns false.
  void run(std::function<bool(std::vector<int> const&)> const& visit) {
    if (a_.order() != b_.order()) {
      return;
    }
    auto sa = sig_a_;
    auto sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return;
    }
    State s{std::vector<int>(n_, -1), std::vector<char>(n_, 0)};
    visit_ = &visit;
    stopped_ = false;
    recurse(s);
  }

 private:
  struct State {
    std::vector<int> image;
    std::vector<char> used;
  };

  bool assign(State& s, int x, int v) const {
    auto ux = static_cast<std::size_t>(x);
    auto uv = static_cast<std::size_t>(v);
    if (s.used[uv] || sig_a_[ux] != sig_b_[uv]) {
      return false;
    }
    s.image[ux] = v;
    s.used[uv] = 1;
    return true;
  }

  bool propagate(State& s, int start) const {
    std::vector<int> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int w = 0; w < static_cast<int>(n_); ++w) {
        if (s.image[static_cast<std::size_t>(w)] < 0) {
          continue;
        }
        for (auto [l, r] : {std::pair{u, w}, std::pair{w, u}}) {
          int c = a_.op(l, r);
          int t = b_.op(s.image[static_cast<std::size_t>(l)],
                        s.image[static_cast<std::size_t>(r)]);
          int& fc = s.image[static_cast<std::size_t>(c)];
          if (fc < 0) {
            if (!assign(s, c, t)) {
              return false;
            }
            queue.push_back(c);
          } else if (fc != t) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void recurse(State const& s) {
    auto next = std::find_if(order_.begin(), order_.end(), [&](int x) {
      return s.image[static_cast<std::size_t>(x)] < 0;
    });
    if (next == order_.end()) {
      if (!(*visit_)(s.image)) {
        stopped_ = true;
      }
      return;
    }
    for (int v = 0; v < static_cast<int>(n_) && !stopped_; ++v) {
      State child = s;
      if (assign(child, *next, v) && propagate(child, *next)) {
        recurse(child);
      }
    }
  }

  Quandle const& a_;
  Quandle const& b_;
  std::size_t n_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<int> order_;
  std::function<bool(std::vector<int> const&)> const* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

PermGroup inn(Quandle const& q, Caps const& caps) {
  auto gens = translations_of(q);
  return closure(gens, caps.elements, q.order());
}

PermGroup aut(Quandle const& q, Caps const& caps) {
  if (q.order() > caps.quandle_order) {
    throw CapExceeded("quandle order for automorphism search", caps.quandle_order);
  }
  std::vector<Perm> found;
  IsoSearch search(q, q);
  search.run([&](std::vector<int> const& images) {
    Perm phi(images);
    if (!is_automorphism(q, phi)) {
      throw std::logic_error("automorphism search produced a non-automorphism");
    }
    found.push_back(std::move(phi));
    if (found.size() > caps.elements) {
      throw CapExceeded("automorphism group order", caps.elements);
    }
    return true;
  });
  // The search is exhaustive, so the result is the whole group.
  return PermGroup::from_elements(q.order(), std::move(found), {}, false);
}

bool is_quasi_inner_weak(Quandle const& q, Perm const& phi) {
  auto orbits = orbit_partition(q);
  std::vector<std::size_t> block(q.order());
  for (std::size_t b = 0; b < orbits.size(); ++b) {
    for (int x : orbits[b]) {
      block[static_cast<std::size_t>(x)] = b;
    }
  }
  for (int x = 0; x < static_cast<int>(q.order()); ++x) {
    if (block[static_cast<std::size_t>(phi(x))] != block[static_cast<std::size_t>(x)]) {
      return false;
    }
  }
  return true;
}

bool is_quasi_inner_strong(Quandle const& q, Perm const& phi) {
  int const n = static_cast<int>(q.order());
  for (int x = 0; x < n; ++x) {
    bool hit = false;
    for (int y = 0; y < n && !hit; ++y) {
      hit = q.op(x, y) == phi(x);
    }
    if (!hit) {
      return false;
    }
  }
  return true;
}

PermGroup qinn(Quandle const& q, Caps const& caps) {
  auto full = aut(q, caps);
  std::vector<Perm> kept;
  for (auto const& phi : full.elements()) {
    if (is_quasi_inner_weak(q, phi)) {
      kept.push_back(phi);
    }
  }
  bool verify = kept.size() <= 2000;
  return PermGroup::from_elements(q.order(), std::move(kept), {}, verify);
}

std::vector<std::vector<int>> orbit_partition(Quandle const& q) {
  auto gens = translations_of(q);
  return orbit_partition(gens, q.order());
}

bool is_connected(Quandle const& q) {
  return orbit_partition(q).size() <= 1;
}

bool is_k_transitive_aut(Quandle const& q, std::size_t k, Caps const& caps) {
  if (k > q.order()) {
    return true;
  }
  return is_k_transitive(aut(q, caps), k);
}

bool is_k_transitive_inn(Quandle const& q, std::size_t k, Caps const& caps) {
  if (k > q.order()) {
    return true;
  }
  return is_k_transitive(inn(q, caps), k);
}

bool is_involutory(Quandle const& q) {
  int const n = static_cast<int>(q.order());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (q.op(q.op(x, y), y) != x) {
        return false;
      }
    }
  }
  return true;
}

bool is_trivial(Quandle const& q) {
  return center(q).size() == q.order();
}

std::optional<std::vector<int>> is_isomorphic(Quandle const& a, Quandle const& b,
                                              Caps const& caps) {
  if (a.order() > caps.group_order || b.order() > caps.group_order) {
    throw CapExceeded("quandle order for isomorphism test", caps.group_order);
  }
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  std::optional<std::vector<int>> witness;
  IsoSearch search(a, b);
  search.run([&](std::vector<int> const& images) {
    witness = images;
    return false;
  });
  if (witness && !is_homomorphism(a, b, *witness)) {
    throw std::logic_error("isomorphism search produced a non-homomorphism");
  }
  return witness;
}

std::optional<long> uniform_coxeter_order(long gens, long m) {
  if (gens <= 0) {
    return 1;
  }
  if (gens == 1 || m == 1) {
    return 2;
  }
  if (gens == 2) {
    return 2 * m;
  }
  if (m == 2) {
    if (gens > 62) {
      throw ArithmeticOverflow("Coxeter group order does not fit in 64 bits");
    }
    return 1L << gens;
  }
  // Three or more generators with all labels >= 3 contain the (m,m,m)
  // triangle group, which is infinite.
  return std::nullopt;
}

}  // namespace quandlekit
