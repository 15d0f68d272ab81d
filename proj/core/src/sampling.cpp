#include "edmf/sampling.hpp"

namespace edmf {

std::size_t Sampler::index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
}

Element Sampler::element(const Ring& ring, int bound) {
  if (ring.is_integers())
    return ring.from_int(std::uniform_int_distribution<long>(-bound, bound)(rng_));
  std::uniform_int_distribution<gfpoly::Coeff> coeff(0, ring.characteristic() - 1);
  gfpoly::Poly p(static_cast<std::size_t>(bound) + 1);
  for (auto& c : p) c = coeff(rng_);
  gfpoly::trim(p);
  return Element(ring, std::move(p));
}

Matrix Sampler::matrix(const Ring& ring, std::size_t rows, std::size_t cols, int bound) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = element(ring, bound);
  return m;
}

Sampler::Unimodular Sampler::unimodular(const Ring& ring, std::size_t n, std::size_t steps) {
  Matrix m = Matrix::identity(ring, n);
  Matrix inv = m;
  if (n == 0) return {m, inv};
  const int multiplier_bound = ring.is_integers() ? 2 : 1;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t kind = index(4);
    const std::size_t i = index(n);
    std::size_t j = index(n);
    if (kind == 0) {
      // row_i *= unit; inverse column_i *= unit^-1
      Element unit = ring.is_integers() ? ring.from_int(index(2) ? 1 : -1)
                                        : ring.from_int(static_cast<long>(1 + index(ring.characteristic() - 1)));
      const Element uinv = unit_inverse(unit);
      for (std::size_t c = 0; c < n; ++c) m(i, c) *= unit;
      for (std::size_t r = 0; r < n; ++r) inv(r, i) *= uinv;
    } else if (kind == 1) {
      m.swap_rows(i, j);
      inv.swap_cols(i, j);
    } else {
      if (i == j) j = (j + 1) % n;
      if (i == j) continue;
      // row_i += c * row_j; inverse column_j -= c * column_i
      const Element c = element(ring, multiplier_bound);
      for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
      for (std::size_t r = 0; r < n; ++r) inv(r, j) -= inv(r, i) * c;
    }
  }
  return {m, inv};
}

MatrixFactorization Sampler::conjugate(const MatrixFactorization& a, std::size_t steps) {
  const auto A = unimodular(a.ring(), a.rho(), steps);
  const auto B = unimodular(a.ring(), a.rho(), steps);
  return MatrixFactorization(B.m * a.u() * A.inverse, A.m * a.v() * B.inverse, a.W());
}

std::vector<PrimaryLabel> Sampler::labels(const CriticalData& cd, std::size_t max_count) {
  std::vector<PrimaryLabel> out;
  if (cd.critical.empty()) return out;
  const std::size_t count = index(max_count + 1);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& cp = cd.critical[index(cd.critical.size())];
    out.push_back({cp.prime, static_cast<unsigned>(1 + index(cp.order - 1))});
  }
  return out;
}

Element Sampler::divisor(const PrimeFactorization& fac) {
  Element d = fac.unit.ring().one();
  for (const auto& [p, e] : fac.factors) d *= pow(p, static_cast<unsigned>(index(e + 1)));
  return d;
}

}  // namespace edmf
