#pragma once

// Dense univariate polynomial kernels over the prime field GF(p).
//
// A polynomial is a coefficient vector in ascending degree. Every function
// returns trimmed vectors (no trailing zero coefficient); the zero
// polynomial is the empty vector. Coefficients are kept in [0, p).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace edmf::gfpoly {

using Coeff = std::uint32_t;
using Poly = std::vector<Coeff>;

void trim(Poly& a);
inline int degree(std::span<const Coeff> a) { return static_cast<int>(a.size()) - 1; }

Coeff mod_inverse(Coeff a, Coeff p);
Coeff reduce(long long value, Coeff p);

Poly add(std::span<const Coeff> a, std::span<const Coeff> b, Coeff p);
Poly sub(std::span<const Coeff> a, std::span<const Coeff> b, Coeff p);
Poly neg(std::span<const Coeff> a, Coeff p);
Poly scale(std::span<const Coeff> a, Coeff c, Coeff p);
Poly mul(std::span<const Coeff> a, std::span<const Coeff> b, Coeff p);

// Euclidean division a = q*b + r with deg r < deg b. b must be non-zero.
std::pair<Poly, Poly> divmod(std::span<const Coeff> a, std::span<const Coeff> b, Coeff p);

// Ordering used for canonical primes: degree first, then coefficients
// compared from the leading one downwards.
int compare(std::span<const Coeff> a, std::span<const Coeff> b);

}  // namespace edmf::gfpoly
