#pragma once

// Seeded random generators for tests, benchmarks and CLI self-checks.

#include <cstdint>
#include <random>
#include <vector>

#include "edmf/classify.hpp"

namespace edmf {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  std::size_t index(std::size_t bound);  // uniform in [0, bound)

  // Z: uniform in [-bound, bound]. GF(p)[x]: degree <= bound, uniform coefficients.
  Element element(const Ring& ring, int bound);
  Matrix matrix(const Ring& ring, std::size_t rows, std::size_t cols, int bound);

  struct Unimodular {
    Matrix m;
    Matrix inverse;
  };
  // Product of `steps` random transvections, swaps and unit scalings.
  Unimodular unimodular(const Ring& ring, std::size_t n, std::size_t steps);

  // (A v B^-1, B u A^-1) for random unimodular A, B: strongly isomorphic to a.
  MatrixFactorization conjugate(const MatrixFactorization& a, std::size_t steps);

  // Random multiset of up to max_count primary labels valid for cd.
  std::vector<PrimaryLabel> labels(const CriticalData& cd, std::size_t max_count);

  // Random divisor of the non-zero element W, via its factorization.
  Element divisor(const PrimeFactorization& fac);

 private:
  std::mt19937_64 rng_;
};

}  // namespace edmf
