#pragma once

// Smith normal form over the supported elementary divisor domains, with
// transformation certificates, and the exact linear algebra built on it.

#include <optional>
#include <vector>

#include "edmf/matrix.hpp"
#include "edmf/module.hpp"

namespace edmf {

// U * A = D * V with U, V invertible (unit determinant), D diagonal with
// non-zero canonical entries d_1 | d_2 | ... | d_rank followed by zeros.
// V_inv is V^-1, so U * A * V_inv = D as well.
struct SmithDecomposition {
  Matrix U;
  Matrix V;
  Matrix V_inv;
  Matrix D;
  std::size_t rank = 0;
  std::vector<Element> invariant_factors;
};

// gcd-driven row/column reduction with Bezout 2x2 blocks; pivots on the
// smallest non-zero entry, then repairs the divisibility chain.
SmithDecomposition smith(const Matrix& a);

inline std::vector<Element> invariant_factors(const Matrix& a) { return smith(a).invariant_factors; }

struct DeterminantalInvariants {
  std::vector<Element> delta;  // delta_0 = 1, delta_1, ..., delta_rank (canonical)
  std::size_t rank = 0;
  bool from_minors = true;     // false when the input exceeded the minor-enumeration cap
};

inline constexpr std::size_t kMinorEnumerationCap = 5;

// delta_k = gcd of all k x k minors, by explicit minor expansion for
// inputs up to kMinorEnumerationCap in both dimensions; larger inputs fall
// back to products of SNF invariant factors (from_minors = false).
DeterminantalInvariants determinantal_invariants(const Matrix& a);

// d_k = delta_k / delta_{k-1}.
std::vector<Element> invariant_factors_via_delta(const Matrix& a);

// Same shape and ring required; compares rank and invariant factors.
bool equivalent(const Matrix& a, const Matrix& b);

// Columns freely generate ker(a); shape cols x (cols - rank).
Matrix kernel_basis(const Matrix& a);
Matrix kernel_basis(const SmithDecomposition& snf);

// Cyclic decomposition of coker(a) = R^rows / a R^cols.
ModuleInvariants image_cokernel_invariants(const Matrix& a);

// Solves a * x = b over the ring (not its fraction field); nullopt when
// no solution exists. b may have several columns.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> solve(const SmithDecomposition& snf, const Matrix& b);

}  // namespace edmf
