#pragma once

// Effective elementary divisor domains.
//
// Two concrete principal ideal domains are supported: the integers Z and
// univariate polynomials GF(p)[x] over a prime field. Elements carry the
// ring instance they belong to; combining elements of different instances
// raises MixedRingError, there is no coercion.
//
// Every "determined up to association" quantity is normalized to a
// canonical associate: non-negative integers, monic polynomials, 0 for 0.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "edmf/errors.hpp"
#include "edmf/polynomial.hpp"

namespace edmf {

class Element;

enum class RingKind : std::uint8_t { Integers, GaloisPolynomials };

class Ring {
 public:
  Ring() = default;  // the integers

  static Ring integers() { return Ring{}; }
  // GF(p)[x]; p must be a prime below 2^31.
  static Ring polynomials(std::uint32_t p);
  // Accepts "Z" or "GF(p)[x]".
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  bool is_integers() const { return kind_ == RingKind::Integers; }
  // 0 for Z, p for GF(p)[x].
  std::uint32_t characteristic() const { return p_; }

  std::string to_string() const;

  Element zero() const;
  Element one() const;
  Element from_int(long value) const;
  // The polynomial variable x; only valid for GF(p)[x].
  Element variable() const;
  // Element text syntax: "-42", "x^3+2*x+1".
  Element parse_element(std::string_view text) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  RingKind kind_ = RingKind::Integers;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Ring& r);

class Element {
 public:
  Element() = default;  // integer zero
  Element(const Ring& ring, mpz_class value);
  Element(const Ring& ring, gfpoly::Poly coeffs);

  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  // Payload accessors; calling the wrong one for the instance throws.
  const mpz_class& integer() const;
  const gfpoly::Poly& coefficients() const;

  // Polynomial degree, -1 for zero. Throws for Z.
  int degree() const;

  Element operator-() const;
  Element& operator+=(const Element& b);
  Element& operator-=(const Element& b);
  Element& operator*=(const Element& b);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }

  friend bool operator==(const Element& a, const Element& b);

  std::string to_string() const;

 private:
  Ring ring_;
  mpz_class z_;
  gfpoly::Poly poly_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

void require_same_ring(const Element& a, const Element& b);

// ---------------------------------------------------------------------------
// Normal forms, division, gcd

struct CanonicalAssociate {
  Element canonical;
  Element unit;  // canonical == unit * input
};

CanonicalAssociate normalize(const Element& a);
inline Element canonical(const Element& a) { return normalize(a).canonical; }
bool is_canonical(const Element& a);

// Inverse of a unit; throws DivisionError otherwise.
Element unit_inverse(const Element& u);

struct DivMod {
  Element quotient;
  Element remainder;
};

// Euclidean division. For Z the remainder has the sign of the divisor's
// floor convention; for GF(p)[x] deg(remainder) < deg(b).
DivMod divmod(const Element& a, const Element& b);

// divides(b, a): does b divide a. divides(0, a) holds only for a = 0.
bool divides(const Element& b, const Element& a);
// Exact quotient a / b; throws DivisionError if b = 0 or b does not divide a.
Element exact_div(const Element& a, const Element& b);

struct BezoutCertificate {
  Element g;  // canonical gcd
  Element x;
  Element y;  // x*a + y*b == g
};

BezoutCertificate gcd_bezout(const Element& a, const Element& b);
Element gcd(const Element& a, const Element& b);
Element lcm(const Element& a, const Element& b);
Element pow(const Element& a, unsigned exponent);

// Size used for pivot selection: |a| for Z, degree for GF(p)[x].
// Returns <0, 0, >0 like strcmp.
int compare_size(const Element& a, const Element& b);

// Total order on canonical elements: magnitude for Z, (degree, leading
// coefficients first) for GF(p)[x]. Defined for any elements, but only
// meaningful as a prime order on canonical ones.
std::strong_ordering canonical_order(const Element& a, const Element& b);
inline bool canonical_less(const Element& a, const Element& b) {
  return canonical_order(a, b) < 0;
}

// ---------------------------------------------------------------------------
// Factorization and Kaplansky's condition

struct PrimeFactorization {
  Element unit;
  std::vector<std::pair<Element, unsigned>> factors;  // canonical primes, sorted

  Element product() const;
};

// Trial division. Throws PreconditionError for a = 0.
PrimeFactorization factorize(const Element& a);
bool is_prime(const Element& a);

// Returns (p, q) with gcd(p*a, p*b + q*c) a unit. Requires gcd(a, b, c) to
// be a unit; throws PreconditionError otherwise.
std::pair<Element, Element> kaplansky_solve(const Element& a, const Element& b,
                                            const Element& c);

// Elements of bounded size: |n| <= level for Z (ordered 0, 1, -1, 2, -2, ...),
// all polynomials of degree < level for GF(p)[x].
std::vector<Element> small_elements(const Ring& ring, unsigned level);

}  // namespace edmf
