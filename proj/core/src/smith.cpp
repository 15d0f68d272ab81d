#include "edmf/smith.hpp"

#include <algorithm>
#include <numeric>

namespace edmf {

namespace {

// 2x2 transform with unit determinant.
struct Block {
  Element g00, g01, g10, g11;
};

class Reducer {
 public:
  explicit Reducer(const Matrix& a)
      : ring_(a.ring()),
        d_(a),
        u_(Matrix::identity(a.ring(), a.rows())),
        v_(Matrix::identity(a.ring(), a.cols())),
        v_inv_(Matrix::identity(a.ring(), a.cols())) {}

  SmithDecomposition run() {
    const std::size_t m = d_.rows(), n = d_.cols();
    std::size_t rank = 0;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      if (!bring_pivot(t)) break;
      clear_cross(t);
      rank = t + 1;
    }
    repair_chain(rank);
    for (std::size_t t = 0; t < rank; ++t) {
      const auto [canon, unit] = normalize(d_(t, t));
      if (!unit.is_one()) scale_row(t, unit);
    }
    SmithDecomposition out{std::move(u_), std::move(v_), std::move(v_inv_), std::move(d_), rank, {}};
    out.invariant_factors.reserve(rank);
    for (std::size_t t = 0; t < rank; ++t) out.invariant_factors.push_back(out.D(t, t));
    return out;
  }

 private:
  // Moves the smallest non-zero entry of the trailing submatrix to (t, t).
  bool bring_pivot(std::size_t t) {
    std::size_t best_i = 0, best_j = 0;
    bool found = false;
    for (std::size_t i = t; i < d_.rows(); ++i) {
      for (std::size_t j = t; j < d_.cols(); ++j) {
        const Element& e = d_(i, j);
        if (e.is_zero()) continue;
        if (!found || compare_size(e, d_(best_i, best_j)) < 0) {
          best_i = i;
          best_j = j;
          found = true;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, best_i);
    swap_cols(t, best_j);
    return true;
  }

  void clear_cross(std::size_t t) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < d_.rows(); ++i)
        if (!d_(i, t).is_zero()) eliminate_in_column(t, i, t);
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (!d_(t, j).is_zero()) eliminate_in_row(t, j, t);
      for (std::size_t i = t + 1; i < d_.rows() && !dirty; ++i) dirty = !d_(i, t).is_zero();
    }
  }

  // Zeroes d(i, c) against the pivot d(t, c) using rows t and i.
  void eliminate_in_column(std::size_t t, std::size_t i, std::size_t c) {
    const Element a = d_(t, c);
    const Element b = d_(i, c);
    if (divides(a, b)) {
      const Element q = exact_div(b, a);
      apply_rows(t, i, Block{ring_.one(), ring_.zero(), -q, ring_.one()});
      return;
    }
    const auto cert = gcd_bezout(a, b);
    apply_rows(t, i, Block{cert.x, cert.y, -exact_div(b, cert.g), exact_div(a, cert.g)});
  }

  // Zeroes d(r, j) against the pivot d(r, t) using columns t and j.
  void eliminate_in_row(std::size_t t, std::size_t j, std::size_t r) {
    const Element a = d_(r, t);
    const Element b = d_(r, j);
    if (divides(a, b)) {
      const Element q = exact_div(b, a);
      apply_cols(t, j, Block{ring_.one(), -q, ring_.zero(), ring_.one()});
      return;
    }
    const auto cert = gcd_bezout(a, b);
    apply_cols(t, j, Block{cert.x, -exact_div(b, cert.g), cert.y, exact_div(a, cert.g)});
  }

  // (d_i, d_j) -> (gcd, lcm) on the diagonal until d_1 | d_2 | ... holds.
  void repair_chain(std::size_t rank) {
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = i + 1; j < rank; ++j) {
        if (divides(d_(i, i), d_(j, j))) continue;
        apply_cols(i, j, Block{ring_.one(), ring_.zero(), ring_.one(), ring_.one()});
        eliminate_in_column(i, j, i);
        eliminate_in_row(i, j, i);
      }
    }
  }

  // [row_i; row_j] <- G [row_i; row_j] on D and U.
  void apply_rows(std::size_t i, std::size_t j, const Block& g) {
    combine_rows(d_, i, j, g);
    combine_rows(u_, i, j, g);
  }

  // [col_i, col_j] <- [col_i, col_j] G on D and V^-1; V picks up G^-1 on the left.
  void apply_cols(std::size_t i, std::size_t j, const Block& g) {
    combine_cols(d_, i, j, g);
    combine_cols(v_inv_, i, j, g);
    const Element det = g.g00 * g.g11 - g.g01 * g.g10;
    const Element inv = unit_inverse(det);
    combine_rows(v_, i, j, Block{inv * g.g11, -(inv * g.g01), -(inv * g.g10), inv * g.g00});
  }

  static void combine_rows(Matrix& m, std::size_t i, std::size_t j, const Block& g) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Element x = m(i, c);
      const Element y = m(j, c);
      if (x.is_zero() && y.is_zero()) continue;
      m(i, c) = g.g00 * x + g.g01 * y;
      m(j, c) = g.g10 * x + g.g11 * y;
    }
  }

  static void combine_cols(Matrix& m, std::size_t i, std::size_t j, const Block& g) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Element x = m(r, i);
      const Element y = m(r, j);
      if (x.is_zero() && y.is_zero()) continue;
      m(r, i) = x * g.g00 + y * g.g10;
      m(r, j) = x * g.g01 + y * g.g11;
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    d_.swap_rows(i, j);
    u_.swap_rows(i, j);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    d_.swap_cols(i, j);
    v_inv_.swap_cols(i, j);
    v_.swap_rows(i, j);
  }

  void scale_row(std::size_t i, const Element& unit) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(i, c) *= unit;
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) *= unit;
  }

  Ring ring_;
  Matrix d_;
  Matrix u_;
  Matrix v_;
  Matrix v_inv_;
};

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

SmithDecomposition smith(const Matrix& a) { return Reducer(a).run(); }

DeterminantalInvariants determinantal_invariants(const Matrix& a) {
  const Ring& ring = a.ring();
  DeterminantalInvariants out;
  out.delta.push_back(ring.one());
  const std::size_t kmax = std::min(a.rows(), a.cols());

  if (a.rows() > kMinorEnumerationCap || a.cols() > kMinorEnumerationCap) {
    out.from_minors = false;
    const auto snf = smith(a);
    Element acc = ring.one();
    for (const auto& d : snf.invariant_factors) {
      acc = canonical(acc * d);
      out.delta.push_back(acc);
    }
    out.rank = snf.rank;
    return out;
  }

  for (std::size_t k = 1; k <= kmax; ++k) {
    Element g = ring.zero();
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        Matrix minor(ring, k, k);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) minor(r, c) = a(rows[r], cols[c]);
        g = gcd(g, determinant_cofactor(minor));
      });
    });
    if (g.is_zero()) break;
    out.delta.push_back(g);
    out.rank = k;
  }
  return out;
}

std::vector<Element> invariant_factors_via_delta(const Matrix& a) {
  const auto inv = determinantal_invariants(a);
  std::vector<Element> out;
  for (std::size_t k = 1; k < inv.delta.size(); ++k)
    out.push_back(canonical(exact_div(inv.delta[k], inv.delta[k - 1])));
  return out;
}

bool equivalent(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError("equivalent: dimension mismatch");
  const auto sa = smith(a);
  const auto sb = smith(b);
  return sa.rank == sb.rank && sa.invariant_factors == sb.invariant_factors;
}

Matrix kernel_basis(const SmithDecomposition& snf) {
  const std::size_t n = snf.V_inv.cols();
  return snf.V_inv.block(0, snf.rank, n, n - snf.rank);
}

Matrix kernel_basis(const Matrix& a) { return kernel_basis(smith(a)); }

ModuleInvariants image_cokernel_invariants(const Matrix& a) {
  const auto snf = smith(a);
  std::vector<Element> chain = snf.invariant_factors;
  for (std::size_t k = snf.rank; k < a.rows(); ++k) chain.push_back(a.ring().zero());
  return ModuleInvariants::from_chain(a.ring(), std::move(chain));
}

std::optional<Matrix> solve(const SmithDecomposition& snf, const Matrix& b) {
  const Ring& ring = b.ring();
  const std::size_t m = snf.U.rows();
  const std::size_t n = snf.V.rows();
  if (b.rows() != m) throw PreconditionError("solve: right-hand side has the wrong row count");
  // U A X = D V X = U B; with Y = V X the system is diagonal.
  const Matrix ub = snf.U * b;
  Matrix y(ring, n, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t i = 0; i < m; ++i) {
      const Element& rhs = ub(i, col);
      if (i < snf.rank) {
        const Element& d = snf.D(i, i);
        if (!divides(d, rhs)) return std::nullopt;
        y(i, col) = exact_div(rhs, d);
      } else if (!rhs.is_zero()) {
        return std::nullopt;
      }
    }
  }
  return snf.V_inv * y;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  return solve(smith(a), b);
}

// ---------------------------------------------------------------------------

ModuleInvariants ModuleInvariants::from_chain(const Ring& ring, std::vector<Element> chain,
                                              std::string context) {
  ModuleInvariants out{ring, std::move(context), {}};
  std::vector<Element> free_part;
  for (auto& c : chain) {
    if (c.ring() != ring) throw MixedRingError("module factor from another ring");
    if (c.is_unit()) continue;
    if (c.is_zero()) {
      free_part.push_back(std::move(c));
    } else {
      out.cyclic_factors.push_back(canonical(c));
    }
  }
  for (std::size_t k = 1; k < out.cyclic_factors.size(); ++k)
    if (!divides(out.cyclic_factors[k - 1], out.cyclic_factors[k]))
      throw ValidationError("module factors do not form a divisibility chain");
  for (auto& z : free_part) out.cyclic_factors.push_back(std::move(z));
  return out;
}

std::size_t ModuleInvariants::free_rank() const {
  return static_cast<std::size_t>(std::count_if(cyclic_factors.begin(), cyclic_factors.end(),
                                                [](const Element& c) { return c.is_zero(); }));
}

bool ModuleInvariants::annihilated_by(const Element& g) const {
  for (const auto& c : cyclic_factors)
    if (!divides(c, g)) return false;
  return true;
}

}  // namespace edmf
