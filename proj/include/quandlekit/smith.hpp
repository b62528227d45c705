#ifndef QUANDLEKIT_SMITH_HPP_
#define QUANDLEKIT_SMITH_HPP_

#include <cstdint>
#include <vector>

namespace quandlekit {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// D = U * A * V with U, V unimodular and D diagonal, each nonzero d_i
/// dividing the next. All arithmetic is overflow-checked.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  IntMatrix U_inverse;
  IntMatrix V_inverse;
  /// Nonzero diagonal entries of D in order, ones included.
  std::vector<std::int64_t> invariant_factors;
  /// Columns of A minus its rank: the free rank of the cokernel Z^cols / rows(A).
  std::size_t free_rank = 0;
};

/// Throws ArithmeticOverflow rather than wrapping. The result is certified
/// before returning: U*A*V == D, U*U_inverse == I and V*V_inverse == I.
/// `rows` and `cols` give the shape, so empty matrices keep their width.
SmithForm smith_normal_form(IntMatrix const& a, std::size_t rows, std::size_t cols);

IntMatrix multiply(IntMatrix const& a, IntMatrix const& b, std::size_t inner);
IntMatrix identity_matrix(std::size_t n);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace quandlekit

#endif  // QUANDLEKIT_SMITH_HPP_
