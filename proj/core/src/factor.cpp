#include <algorithm>

#include "edmf/ring.hpp"

namespace edmf {

namespace {

void push_factor(PrimeFactorization& out, const Element& prime, unsigned exponent) {
  if (exponent > 0) out.factors.emplace_back(prime, exponent);
}

PrimeFactorization factorize_integer(const Element& a) {
  const Ring& ring = a.ring();
  PrimeFactorization out{normalize(a).unit, {}};
  mpz_class n = abs(a.integer());
  auto strip_divisor = [&](const mpz_class& d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      ++e;
    }
    push_factor(out, Element(ring, d), e);
  };
  strip_divisor(2);
  for (mpz_class d = 3; d * d <= n; d += 2) strip_divisor(d);
  if (n > 1) out.factors.emplace_back(Element(ring, n), 1u);
  return out;
}

// Trial division by every monic polynomial in canonical order; a composite
// divisor can never divide once its smaller prime factors are removed.
PrimeFactorization factorize_polynomial(const Element& a) {
  const Ring& ring = a.ring();
  const auto p = ring.characteristic();
  auto [rest, unit] = normalize(a);
  PrimeFactorization out{unit_inverse(unit), {}};

  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    gfpoly::Poly candidate(static_cast<std::size_t>(d) + 1, 0);
    candidate[static_cast<std::size_t>(d)] = 1;
    while (true) {
      const Element divisor(ring, candidate);
      unsigned e = 0;
      while (true) {
        auto [q, r] = divmod(rest, divisor);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++e;
      }
      push_factor(out, divisor, e);
      if (2 * d > rest.degree()) break;
      // Next monic polynomial of degree d; the low coefficients count in
      // base p with the x^(d-1) coefficient most significant.
      int k = 0;
      while (k < d && ++candidate[static_cast<std::size_t>(k)] == p) candidate[static_cast<std::size_t>(k++)] = 0;
      if (k == d) break;
    }
  }
  if (rest.degree() >= 1) out.factors.emplace_back(rest, 1u);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  return out;
}

}  // namespace

Element PrimeFactorization::product() const {
  Element acc = unit;
  for (const auto& [prime, e] : factors) acc *= pow(prime, e);
  return acc;
}

PrimeFactorization factorize(const Element& a) {
  if (a.is_zero()) throw PreconditionError("cannot factorize 0");
  return a.ring().is_integers() ? factorize_integer(a) : factorize_polynomial(a);
}

bool is_prime(const Element& a) {
  if (a.is_zero() || a.is_unit()) return false;
  const auto f = factorize(a);
  return f.factors.size() == 1 && f.factors.front().second == 1;
}

std::pair<Element, Element> kaplansky_solve(const Element& a, const Element& b, const Element& c) {
  require_same_ring(a, b);
  require_same_ring(a, c);
  const Ring& ring = a.ring();
  if (!gcd(gcd(a, b), c).is_unit())
    throw PreconditionError("kaplansky_solve: gcd(" + a.to_string() + ", " + b.to_string() + ", " +
                            c.to_string() + ") is not a unit");

  auto works = [&](const Element& p, const Element& q) {
    return gcd(p * a, p * b + q * c).is_unit();
  };

  if (works(ring.one(), ring.zero())) return {ring.one(), ring.zero()};
  if (a.is_zero()) {
    // gcd(b, c) is a unit here, so a Bezout pair makes p*b + q*c = 1.
    const auto cert = gcd_bezout(b, c);
    const Element inv = unit_inverse(cert.g);
    return {cert.x * inv, cert.y * inv};
  }

  const unsigned max_level = ring.is_integers() ? 256u : 8u;
  std::size_t previous = 0;
  for (unsigned level = 1; level <= max_level; ++level) {
    const auto box = small_elements(ring, level);
    for (std::size_t i = 0; i < box.size(); ++i) {
      for (std::size_t j = 0; j < box.size(); ++j) {
        if (i < previous && j < previous) continue;
        if (works(box[i], box[j])) return {box[i], box[j]};
      }
    }
    previous = box.size();
  }
  throw PreconditionError("kaplansky_solve: no solution within the search bound");
}

}  // namespace edmf
