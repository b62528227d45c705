#include "quandlekit/fingroup.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace quandlekit {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<int> table,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  std::size_t const n = order_;
  if (n == 0 || table_.size() != n * n) {
    throw InvalidTable("group table must be a nonempty square");
  }
  if (!labels_.empty() && labels_.size() != n) {
    throw InvalidTable("label count does not match group order");
  }
  for (int v : table_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw InvalidTable("group table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      auto r = static_cast<std::size_t>(table_[a * n + b]);
      auto c = static_cast<std::size_t>(table_[b * n + a]);
      if (row[r] || col[c]) {
        throw InvalidTable("group table is not a Latin square");
      }
      row[r] = col[c] = true;
    }
  }
  identity_ = -1;
  for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = table_[e * n + a] == static_cast<int>(a)
           && table_[a * n + e] == static_cast<int>(a);
    }
    if (ok) {
      identity_ = static_cast<int>(e);
    }
  }
  if (identity_ < 0) {
    throw InvalidTable("group table has no identity");
  }
  int const m = static_cast<int>(n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw InvalidTable("group table is not associative");
        }
      }
    }
  }
  inverses_.assign(n, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (mul(a, b) == identity_) {
        inverses_[static_cast<std::size_t>(a)] = b;
      }
    }
  }
}

int FiniteGroup::power(int a, long k) const {
  int base = k < 0 ? inverse(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  int result = identity_;
  while (e > 0) {
    if (e & 1UL) {
      result = mul(result, base);
    }
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(int a) const {
  std::size_t k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) {
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  int const n = static_cast<int>(order_);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) {
        return false;
      }
    }
  }
  return true;
}

std::string FiniteGroup::label(int a) const {
  return labels_.empty() ? std::to_string(a) : labels_[static_cast<std::size_t>(a)];
}

Perm FiniteGroup::left_regular(int a) const {
  std::vector<int> images(order_);
  for (std::size_t b = 0; b < order_; ++b) {
    images[b] = mul(a, static_cast<int>(b));
  }
  return Perm(std::move(images));
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<int> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<int>((a + b) % n);
    }
  }
  return FiniteGroup(n, std::move(table), std::move(labels));
}

FiniteGroup symmetric_group(std::size_t n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t const k = perms.size();
  std::vector<int> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    std::string l = "[";
    for (std::size_t i = 0; i < n; ++i) {
      l += (i ? "," : "") + std::to_string(perms[a][i]);
    }
    labels[a] = l + "]";
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      }
      auto it = std::lower_bound(perms.begin(), perms.end(), c);
      table[a * k + b] = static_cast<int>(it - perms.begin());
    }
  }
  return FiniteGroup(k, std::move(table), std::move(labels));
}

FiniteGroup dihedral_group(std::size_t n) {
  std::size_t const k = 2 * n;
  long const m = static_cast<long>(n);
  std::vector<int> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    long ra = static_cast<long>(a % n), sa = static_cast<long>(a / n);
    labels[a] = "r^" + std::to_string(ra) + (sa ? " s" : "");
    for (std::size_t b = 0; b < k; ++b) {
      long rb = static_cast<long>(b % n), sb = static_cast<long>(b / n);
      long r = (((ra + (sa ? -rb : rb)) % m) + m) % m;
      long s = (sa + sb) % 2;
      table[a * k + b] = static_cast<int>(s * m + r);
    }
  }
  return FiniteGroup(k, std::move(table), std::move(labels));
}

FiniteGroup quaternion_group() {
  // Units 1, i, j, k as 0..3; products unit_mul[a][b] = (sign, unit).
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<int> table(64);
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      auto [sign, unit] = unit_mul[static_cast<std::size_t>(a / 2)][static_cast<std::size_t>(b / 2)];
      if (a % 2) sign = -sign;
      if (b % 2) sign = -sign;
      table[static_cast<std::size_t>(a * 8 + b)] = 2 * unit + (sign < 0 ? 1 : 0);
    }
  }
  return FiniteGroup(8, std::move(table), std::move(labels));
}

FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h) {
  std::size_t const ng = g.order(), nh = h.order(), k = ng * nh;
  std::vector<int> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    int ag = static_cast<int>(a / nh), ah = static_cast<int>(a % nh);
    labels[a] = "(" + g.label(ag) + "," + h.label(ah) + ")";
    for (std::size_t b = 0; b < k; ++b) {
      int bg = static_cast<int>(b / nh), bh = static_cast<int>(b % nh);
      table[a * k + b] =
          g.mul(ag, bg) * static_cast<int>(nh) + h.mul(ah, bh);
    }
  }
  return FiniteGroup(k, std::move(table), std::move(labels));
}

FiniteGroup abelian_group(std::vector<int> const& moduli) {
  if (moduli.empty()) {
    return cyclic_group(1);
  }
  std::size_t k = 1;
  for (int m : moduli) {
    if (m < 1) {
      throw UnsupportedSpec("cyclic order must be positive");
    }
    k *= static_cast<std::size_t>(m);
  }
  auto digits = [&](std::size_t a) {
    std::vector<int> d(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      d[i] = static_cast<int>(a % static_cast<std::size_t>(moduli[i]));
      a /= static_cast<std::size_t>(moduli[i]);
    }
    return d;
  };
  std::vector<int> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    auto da = digits(a);
    if (moduli.size() == 1) {
      labels[a] = std::to_string(da[0]);
    } else {
      std::string l = "(";
      for (std::size_t i = 0; i < da.size(); ++i) {
        l += (i ? "," : "") + std::to_string(da[i]);
      }
      labels[a] = l + ")";
    }
    for (std::size_t b = 0; b < k; ++b) {
      auto db = digits(b);
      std::size_t idx = 0;
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        idx = idx * static_cast<std::size_t>(moduli[i])
              + static_cast<std::size_t>((da[i] + db[i]) % moduli[i]);
      }
      table[a * k + b] = static_cast<int>(idx);
    }
  }
  return FiniteGroup(k, std::move(table), std::move(labels));
}

namespace {

struct Atom {
  char kind;
  int n;
};

std::vector<Atom> parse_atoms(std::string_view spec) {
  std::vector<Atom> atoms;
  std::size_t i = 0;
  auto fail = [&](std::string const& why) {
    throw ParseError("group spec '" + std::string(spec) + "': " + why);
  };
  if (spec.empty()) {
    fail("empty");
  }
  while (true) {
    if (i >= spec.size()) {
      fail("expected an atom");
    }
    char kind = spec[i];
    if (kind != 'Z' && kind != 'S' && kind != 'D' && kind != 'Q') {
      fail(std::string("unknown atom '") + kind + "'");
    }
    ++i;
    std::size_t start = i;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
      ++i;
    }
    if (start == i) {
      fail("atom without a size");
    }
    int n = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + start, spec.data() + i, n);
    if (ec != std::errc{}) {
      throw UnsupportedSpec("group spec '" + std::string(spec) + "': size too large");
    }
    if (kind == 'Q' && n != 8) {
      fail("only Q8 is a quaternion atom");
    }
    atoms.push_back({kind, n});
    if (i == spec.size()) {
      break;
    }
    if (spec[i] != 'x') {
      fail(std::string("unexpected character '") + spec[i] + "'");
    }
    ++i;
  }
  return atoms;
}

constexpr std::size_t kMaxCatalogOrder = 200;

}  // namespace

FiniteGroup make_group(std::string_view spec) {
  auto atoms = parse_atoms(spec);
  std::size_t total = 1;
  bool all_cyclic = true;
  for (auto const& a : atoms) {
    std::size_t order = 0;
    switch (a.kind) {
      case 'Z':
        if (a.n < 1) throw UnsupportedSpec("Z0 is not a group");
        order = static_cast<std::size_t>(a.n);
        break;
      case 'S':
        if (a.n < 1 || a.n > 5) throw UnsupportedSpec("S_n is supported for 1 <= n <= 5");
        order = 1;
        for (int i = 2; i <= a.n; ++i) order *= static_cast<std::size_t>(i);
        all_cyclic = false;
        break;
      case 'D':
        if (a.n < 1 || a.n > 6) throw UnsupportedSpec("D_n is supported for 1 <= n <= 6");
        order = 2 * static_cast<std::size_t>(a.n);
        all_cyclic = false;
        break;
      default:
        order = 8;
        all_cyclic = false;
    }
    total *= order;
    if (total > kMaxCatalogOrder) {
      throw UnsupportedSpec("group spec '" + std::string(spec) + "' has order above "
                            + std::to_string(kMaxCatalogOrder));
    }
  }
  if (all_cyclic) {
    std::vector<int> moduli;
    for (auto const& a : atoms) moduli.push_back(a.n);
    return abelian_group(moduli);
  }
  auto build = [](Atom const& a) {
    switch (a.kind) {
      case 'Z': return cyclic_group(static_cast<std::size_t>(a.n));
      case 'S': return symmetric_group(static_cast<std::size_t>(a.n));
      case 'D': return dihedral_group(static_cast<std::size_t>(a.n));
      default: return quaternion_group();
    }
  };
  FiniteGroup g = build(atoms.front());
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    g = direct_product(g, build(atoms[i]));
  }
  return g;
}

std::vector<int> parse_cyclic_factors(std::string_view spec) {
  std::vector<int> moduli;
  for (auto const& a : parse_atoms(spec)) {
    if (a.kind != 'Z') {
      throw UnsupportedSpec("coefficient spec '" + std::string(spec)
                            + "' must be a product of cyclic groups");
    }
    if (a.n < 1) {
      throw UnsupportedSpec("Z0 is not a group");
    }
    moduli.push_back(a.n);
  }
  return moduli;
}

std::vector<int> center(FiniteGroup const& g) {
  std::vector<int> result;
  int const n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y) {
      central = g.mul(x, y) == g.mul(y, x);
    }
    if (central) {
      result.push_back(x);
    }
  }
  return result;
}

bool is_group_automorphism(FiniteGroup const& g, Perm const& phi) {
  if (phi.degree() != g.order()) {
    return false;
  }
  int const n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (phi(g.mul(a, b)) != g.mul(phi(a), phi(b))) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<bool> subgroup_mask(FiniteGroup const& g, std::vector<int> const& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> elems{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      int h = g.mul(elems[i], s);
      if (!in[static_cast<std::size_t>(h)]) {
        in[static_cast<std::size_t>(h)] = true;
        elems.push_back(h);
      }
    }
  }
  return in;
}

bool generates(FiniteGroup const& g, std::vector<int> const& gens) {
  auto mask = subgroup_mask(g, gens);
  return std::all_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return r;
}

// Extends a partial assignment gens[0..count) -> images to the subgroup the
// generators span. Returns false when the assignment is not a well-defined
// injective homomorphism there.
bool extend_partial(FiniteGroup const& g, FiniteGroup const& h,
                    std::vector<int> const& gens, std::vector<int> const& images,
                    std::size_t count, std::vector<int>& map) {
  map.assign(g.order(), -1);
  std::vector<char> used(h.order(), 0);
  map[static_cast<std::size_t>(g.identity())] = h.identity();
  used[static_cast<std::size_t>(h.identity())] = 1;
  std::vector<int> elems{g.identity()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int u = elems[i];
    for (std::size_t j = 0; j < count; ++j) {
      int v = g.mul(u, gens[j]);
      int fv = h.mul(map[static_cast<std::size_t>(u)], images[j]);
      int& slot = map[static_cast<std::size_t>(v)];
      if (slot < 0) {
        if (used[static_cast<std::size_t>(fv)]) {
          return false;
        }
        slot = fv;
        used[static_cast<std::size_t>(fv)] = 1;
        elems.push_back(v);
      } else if (slot != fv) {
        return false;
      }
    }
  }
  return true;
}

// Enumerates isomorphisms g -> h by choosing images for a generating set of g.
void search_group_isos(FiniteGroup const& g, FiniteGroup const& h,
                       std::function<bool(std::vector<int> const&)> const& visit) {
  if (g.order() != h.order()) {
    return;
  }
  auto gens = small_generating_set(g);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t ord = g.element_order(gens[i]);
    for (int x = 0; x < static_cast<int>(h.order()); ++x) {
      if (h.element_order(x) == ord) {
        candidates[i].push_back(x);
      }
    }
  }
  std::vector<int> images(gens.size(), -1);
  std::vector<int> map;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      if (!(visit(map))) {
        stop = true;
      }
      return;
    }
    for (int c : candidates[i]) {
      if (stop) {
        return;
      }
      images[i] = c;
      if (extend_partial(g, h, gens, images, i + 1, map)) {
        rec(i + 1);
      }
    }
  };
  rec(0);
}

bool same_order_profile(FiniteGroup const& g, FiniteGroup const& h) {
  std::vector<std::size_t> a, b;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) a.push_back(g.element_order(x));
  for (int x = 0; x < static_cast<int>(h.order()); ++x) b.push_back(h.element_order(x));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::vector<int> small_generating_set(FiniteGroup const& g) {
  std::vector<int> gens;
  std::vector<bool> mask = subgroup_mask(g, gens);
  int const n = static_cast<int>(g.order());
  while (!std::all_of(mask.begin(), mask.end(), [](bool b) { return b; })) {
    int best = -1;
    for (int x = 0; x < n; ++x) {
      if (!mask[static_cast<std::size_t>(x)]
          && (best < 0 || g.element_order(x) > g.element_order(best))) {
        best = x;
      }
    }
    gens.push_back(best);
    mask = subgroup_mask(g, gens);
  }
  // Try strictly smaller sets while the number of subsets stays small.
  std::vector<int> nonidentity;
  for (int x = 0; x < n; ++x) {
    if (x != g.identity()) nonidentity.push_back(x);
  }
  for (std::size_t r = 1; r < gens.size(); ++r) {
    if (binomial(nonidentity.size(), r) > 50000.0) {
      break;
    }
    std::vector<std::size_t> pick(r);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> trial;
      for (auto p : pick) trial.push_back(nonidentity[p]);
      if (generates(g, trial)) {
        return trial;
      }
      // Next combination in lexicographic order.
      std::size_t i = r;
      while (i > 0 && pick[i - 1] == nonidentity.size() - r + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return gens;
}

PermGroup automorphism_group(FiniteGroup const& g, Caps const& caps) {
  if (g.order() > caps.group_order) {
    throw CapExceeded("group order for automorphism search", caps.group_order);
  }
  std::vector<Perm> found;
  search_group_isos(g, g, [&](std::vector<int> const& map) {
    Perm phi(map);
    if (!is_group_automorphism(g, phi)) {
      throw std::logic_error("automorphism search produced a non-automorphism");
    }
    found.push_back(std::move(phi));
    if (found.size() > caps.elements) {
      throw CapExceeded("automorphism group order", caps.elements);
    }
    return true;
  });
  return PermGroup::from_elements(g.order(), std::move(found), {}, false);
}

std::optional<std::vector<int>> is_isomorphic(FiniteGroup const& g,
                                              FiniteGroup const& h,
                                              Caps const& caps) {
  if (g.order() > caps.group_order || h.order() > caps.group_order) {
    throw CapExceeded("group order for isomorphism test", caps.group_order);
  }
  if (g.order() != h.order() || !same_order_profile(g, h)) {
    return std::nullopt;
  }
  std::optional<std::vector<int>> witness;
  search_group_isos(g, h, [&](std::vector<int> const& map) {
    witness = map;
    return false;
  });
  if (witness) {
    int const n = static_cast<int>(g.order());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if ((*witness)[static_cast<std::size_t>(g.mul(a, b))]
            != h.mul((*witness)[static_cast<std::size_t>(a)],
                     (*witness)[static_cast<std::size_t>(b)])) {
          throw std::logic_error("isomorphism witness does not preserve products");
        }
      }
    }
  }
  return witness;
}

FiniteGroup semidirect(FiniteGroup const& n, FiniteGroup const& h,
                       std::vector<Perm> const& action) {
  if (action.size() != h.order()) {
    throw NotAHomomorphism("action must give one automorphism per element of H");
  }
  for (auto const& a : action) {
    if (!is_group_automorphism(n, a)) {
      throw NotAHomomorphism("action image is not an automorphism of N");
    }
  }
  int const nh = static_cast<int>(h.order());
  for (int a = 0; a < nh; ++a) {
    for (int b = 0; b < nh; ++b) {
      if (action[static_cast<std::size_t>(h.mul(a, b))]
          != action[static_cast<std::size_t>(a)] * action[static_cast<std::size_t>(b)]) {
        throw NotAHomomorphism("action is not a homomorphism H -> Aut(N)");
      }
    }
  }
  std::size_t const k = n.order() * h.order();
  std::vector<int> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t x = 0; x < k; ++x) {
    int n1 = static_cast<int>(x / h.order()), h1 = static_cast<int>(x % h.order());
    labels[x] = "(" + n.label(n1) + "," + h.label(h1) + ")";
    for (std::size_t y = 0; y < k; ++y) {
      int n2 = static_cast<int>(y / h.order()), h2 = static_cast<int>(y % h.order());
      int np = n.mul(n1, action[static_cast<std::size_t>(h1)](n2));
      table[x * k + y] = np * nh + h.mul(h1, h2);
    }
  }
  return FiniteGroup(k, std::move(table), std::move(labels));
}

FiniteGroup to_finite_group(PermGroup const& g) {
  auto const& el = g.elements();
  std::size_t const k = el.size();
  std::vector<int> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = el[a].to_string();
    for (std::size_t b = 0; b < k; ++b) {
      table[a * k + b] = static_cast<int>(g.index_of(el[a] * el[b]));
    }
  }
  return FiniteGroup(k, std::move(table), std::move(labels));
}

Quandle conj_quandle(FiniteGroup const& g, long n) {
  std::size_t const k = g.order();
  std::vector<int> flat(k * k);
  for (int x = 0; x < static_cast<int>(k); ++x) {
    for (int y = 0; y < static_cast<int>(k); ++y) {
      flat[static_cast<std::size_t>(x) * k + static_cast<std::size_t>(y)] =
          g.mul(g.mul(g.power(y, -n), x), g.power(y, n));
    }
  }
  return Quandle::from_flat(k, std::move(flat), g.labels());
}

Quandle core_quandle(FiniteGroup const& g) {
  std::size_t const k = g.order();
  std::vector<int> flat(k * k);
  for (int x = 0; x < static_cast<int>(k); ++x) {
    for (int y = 0; y < static_cast<int>(k); ++y) {
      flat[static_cast<std::size_t>(x) * k + static_cast<std::size_t>(y)] =
          g.mul(g.mul(y, g.inverse(x)), y);
    }
  }
  return Quandle::from_flat(k, std::move(flat), g.labels());
}

Quandle alexander_quandle(FiniteGroup const& a, Perm const& phi) {
  if (!a.is_abelian()) {
    throw NotAbelian("Alexander quandles need an abelian group");
  }
  if (!is_group_automorphism(a, phi)) {
    throw NotAutomorphism("map is not an automorphism of the group");
  }
  std::size_t const k = a.order();
  std::vector<int> flat(k * k);
  for (int x = 0; x < static_cast<int>(k); ++x) {
    for (int y = 0; y < static_cast<int>(k); ++y) {
      flat[static_cast<std::size_t>(x) * k + static_cast<std::size_t>(y)] =
          a.mul(phi(a.mul(x, a.inverse(y))), y);
    }
  }
  return Quandle::from_flat(k, std::move(flat), a.labels());
}

}  // namespace quandlekit
