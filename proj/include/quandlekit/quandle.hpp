#ifndef QUANDLEKIT_QUANDLE_HPP_
#define QUANDLEKIT_QUANDLE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/caps.hpp"
#include "quandlekit/perm.hpp"

namespace quandlekit {

using Table = std::vector<std::vector<int>>;

/// A finite quandle given by its Cayley table, `op(x, y) == x * y`.
///
/// Every constructor validates the three axioms: idempotence, bijective right
/// translations S_y : x -> x * y, and right self-distributivity.
class Quandle {
 public:
  Quandle() = default;
  /// Validates `table` and reports the first failed axiom with a witness.
  static Quandle from_table(Table const& table,
                            std::vector<std::string> labels = {});
  /// Same as from_table over a row-major flat table of order n.
  static Quandle from_flat(std::size_t order, std::vector<int> flat,
                           std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  int op(int x, int y) const {
    return flat_[static_cast<std::size_t>(x) * order_ + static_cast<std::size_t>(y)];
  }
  /// S_y : x -> x * y.
  Perm right_translation(int y) const;
  std::vector<int> const& flat() const noexcept { return flat_; }
  Table rows() const;
  std::vector<std::string> const& labels() const noexcept { return labels_; }

  friend bool operator==(Quandle const& a, Quandle const& b) {
    return a.order_ == b.order_ && a.flat_ == b.flat_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<int> flat_;
  std::vector<std::string> labels_;
};

/// Checks the axioms on a raw table without building a Quandle; throws the
/// matching AxiomViolation.
void validate_quandle_table(std::size_t order, std::vector<int> const& flat);

/// A verified homomorphism between quandles.
class QuandleMap {
 public:
  /// Throws NotAHomomorphism unless f(x*y) = f(x)*f(y) for all pairs.
  QuandleMap(Quandle const& source, Quandle const& target, std::vector<int> images);
  std::size_t source_order() const noexcept { return source_order_; }
  std::size_t target_order() const noexcept { return target_order_; }
  std::vector<int> const& images() const noexcept { return images_; }
  bool is_bijective() const;

 private:
  std::size_t source_order_;
  std::size_t target_order_;
  std::vector<int> images_;
};

bool is_homomorphism(Quandle const& source, Quandle const& target,
                     std::vector<int> const& images);
bool is_automorphism(Quandle const& q, Perm const& phi);

Quandle trivial_quandle(std::size_t n);
/// R_n: a_i * a_j = a_{2j - i mod n}.
Quandle dihedral_quandle(std::size_t n);
/// The quandle transported along `relabel`: new table entry at
/// (relabel(x), relabel(y)) is relabel(x * y).
Quandle relabel(Quandle const& q, Perm const& relabel);
/// Subtable on `subset` (sorted), or nullopt when the subset is not closed.
std::optional<Quandle> subquandle(Quandle const& q, std::vector<int> const& subset);

/// Elements fixed by every right translation; possibly empty.
std::vector<int> center(Quandle const& q);

struct InnerGenerator {
  int representative;
  Perm translation;
};
/// Distinct right translations S_x, each with its smallest x, ordered by x.
std::vector<InnerGenerator> inner_generators(Quandle const& q);

PermGroup inn(Quandle const& q, Caps const& caps = {});
PermGroup aut(Quandle const& q, Caps const& caps = {});
/// Automorphisms sending each element into its own Inn-orbit.
PermGroup qinn(Quandle const& q, Caps const& caps = {});
/// For every x some y has phi(x) = x * y.
bool is_quasi_inner_strong(Quandle const& q, Perm const& phi);
/// For every x, phi(x) lies in the Inn-orbit of x.
bool is_quasi_inner_weak(Quandle const& q, Perm const& phi);

std::vector<std::vector<int>> orbit_partition(Quandle const& q);
bool is_connected(Quandle const& q);
bool is_k_transitive_aut(Quandle const& q, std::size_t k, Caps const& caps = {});
bool is_k_transitive_inn(Quandle const& q, std::size_t k, Caps const& caps = {});
bool is_involutory(Quandle const& q);
bool is_trivial(Quandle const& q);

/// Isomorphism witness (images of the first quandle's elements) or nullopt.
std::optional<std::vector<int>> is_isomorphic(Quandle const& a, Quandle const& b,
                                              Caps const& caps = {});

/// One representative per isomorphism class of quandles of order n. Each
/// representative is in canonical form: its column sequence (S_0, ..., S_{n-1})
/// is lexicographically minimal over all relabelings. Output is sorted by
/// that column sequence.
std::vector<Quandle> enumerate_quandles(std::size_t n, Caps const& caps = {});
/// Canonical form used by enumerate_quandles.
Quandle canonical_form(Quandle const& q);

/// Inner-automorphism versus Coxeter-group comparison for the Takasaki
/// quandle of a finite abelian group given by cyclic orders.
struct CoxeterReport {
  std::vector<int> factors;
  bool invariant_factor_form = false;  // each order divides the next
  long exponent = 0;                   // lcm of the factors
  long coxeter_m = 0;                  // exponent / 2
  long distinct_translations = 0;      // counted directly
  long formula_count = 0;              // product rule: |2G|
  bool counts_agree = false;
  bool involutions_hold = false;       // S_x^2 = id for all x
  bool braid_relations_hold = false;   // (S_x S_y)^m = id for all x, y
  long inn_order = 0;
  std::optional<long> coxeter_order;   // nullopt when W(M) is infinite
  bool orders_match = false;
};
CoxeterReport coxeter_report(std::vector<int> const& factors, Caps const& caps = {});
/// Order of the Coxeter group on `gens` involutions with every pairwise label
/// equal to `m`, or nullopt if infinite.
std::optional<long> uniform_coxeter_order(long gens, long m);

}  // namespace quandlekit

#endif  // QUANDLEKIT_QUANDLE_HPP_
