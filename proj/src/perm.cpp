#include "quandlekit/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace quandlekit {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int p : images_) {
    if (p < 0 || static_cast<std::size_t>(p) >= images_.size()
        || seen[static_cast<std::size_t>(p)]) {
      throw InvalidTable("image sequence is not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (auto const& cycle : cycles) {
    std::vector<int> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || static_cast<std::size_t>(c[i]) >= degree) {
        throw InvalidTable("cycle point out of range");
      }
      images[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  for (auto len : cycle_type()) {
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) {
      continue;
    }
    out += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      if (j != i) {
        out += " ";
      }
      out += std::to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm operator*(Perm const& a, Perm const& b) {
  if (a.degree() != b.degree()) {
    throw InvalidTable("composing permutations of different degree");
  }
  std::vector<int> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = a(b.images_[i]);
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm power(Perm const& p, long exponent) {
  Perm base = exponent < 0 ? p.inverse() : p;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Perm result = Perm::identity(p.degree());
  while (e > 0) {
    if (e & 1UL) {
      result = result * base;
    }
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::size_t PermHash::operator()(Perm const& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::vector<Perm> greedy_generators(std::vector<Perm> const& elements,
                                    std::size_t degree) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> current{Perm::identity(degree)};
  for (auto const& e : elements) {
    if (current.size() == elements.size()) {
      break;
    }
    if (current.contains(e)) {
      continue;
    }
    gens.push_back(e);
    PermGroup sub;
    try {
      sub = closure(gens, elements.size(), degree);
    } catch (CapExceeded const&) {
      throw NotASubgroup("element set generates a larger group");
    }
    current = std::unordered_set<Perm, PermHash>(sub.elements().begin(),
                                                 sub.elements().end());
  }
  return gens;
}

}  // namespace

bool PermGroup::contains(Perm const& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

long PermGroup::index_of(Perm const& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) {
    return -1;
  }
  return it - elements_.begin();
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements,
                                   std::vector<Perm> generators, bool verify) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generators);
  if (!g.contains(Perm::identity(degree))) {
    throw NotASubgroup("element set does not contain the identity");
  }
  if (g.generators_.empty()) {
    g.generators_ = greedy_generators(g.elements_, degree);
  }
  if (!verify) {
    return g;
  }
  for (auto const& a : g.elements_) {
    if (a.degree() != degree || !g.contains(a.inverse())) {
      throw NotASubgroup("element set is not closed under inversion");
    }
    for (auto const& b : g.elements_) {
      if (!g.contains(a * b)) {
        throw NotASubgroup("element set is not closed under composition");
      }
    }
  }
  return g;
}

PermGroup closure(std::span<Perm const> generators, std::size_t cap,
                  std::size_t degree) {
  if (cap == 0) {
    throw CapExceeded("permutation group order", cap);
  }
  if (!generators.empty()) {
    degree = generators.front().degree();
  }
  for (auto const& g : generators) {
    if (g.degree() != degree) {
      throw InvalidTable("generators act on different degrees");
    }
  }
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm g = std::move(queue.front());
    queue.pop_front();
    for (auto const& s : generators) {
      Perm h = g * s;
      if (seen.insert(h).second) {
        if (seen.size() > cap) {
          throw CapExceeded("permutation group order", cap);
        }
        queue.push_back(std::move(h));
      }
    }
  }
  PermGroup result;
  result.degree_ = degree;
  result.generators_.assign(generators.begin(), generators.end());
  result.elements_.assign(seen.begin(), seen.end());
  std::sort(result.elements_.begin(), result.elements_.end());
  return result;
}

std::vector<std::vector<int>> orbit_partition(std::span<Perm const> generators,
                                              std::size_t degree) {
  std::vector<int> block(degree, -1);
  std::vector<std::vector<int>> orbits;
  for (std::size_t start = 0; start < degree; ++start) {
    if (block[start] >= 0) {
      continue;
    }
    int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{static_cast<int>(start)};
    block[start] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto const& g : generators) {
        int q = g(orbit[i]);
        if (block[static_cast<std::size_t>(q)] < 0) {
          block[static_cast<std::size_t>(q)] = id;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_k_transitive(PermGroup const& group, std::size_t k) {
  std::size_t n = group.degree();
  if (k == 0 || k > n) {
    return true;
  }
  // Number of ordered k-tuples of distinct points.
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) {
    tuples *= n - i;
    if (tuples > group.order()) {
      return false;
    }
  }
  std::set<std::vector<int>> images;
  for (auto const& g : group.elements()) {
    images.emplace(g.images().begin(),
                   g.images().begin() + static_cast<long>(k));
  }
  return images.size() == tuples;
}

}  // namespace quandlekit
