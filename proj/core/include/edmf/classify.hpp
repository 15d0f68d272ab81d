#pragma once

// Classification of matrix factorizations up to strong isomorphism (zmf)
// and up to isomorphism in the homotopy category hmf.
//
// Over a PID every W factors as unit * W0 * prod p^n with W0 square-free and
// n >= 2 for the critical primes p. The non-zero indecomposables of hmf(R, W)
// are the primary factorizations e_{p^i} with 1 <= i <= n_p - 1, so an hmf
// isomorphism class is a multiset of labels (p, i).

#include <vector>

#include "edmf/mf.hpp"
#include "edmf/smith.hpp"

namespace edmf {

struct CriticalPrime {
  Element prime;   // canonical
  unsigned order;  // exponent in W, >= 2

  friend bool operator==(const CriticalPrime&, const CriticalPrime&) = default;
};

struct CriticalData {
  Element W;
  Element unit;
  Element W0;  // square-free, coprime to every critical prime
  std::vector<CriticalPrime> critical;

  bool is_non_critical() const { return critical.empty(); }
  // Order of `prime` in W if it is critical, 0 otherwise.
  unsigned order_of(const Element& prime) const;

  friend bool operator==(const CriticalData&, const CriticalData&) = default;
};

// Requires W neither zero nor a unit.
CriticalData critical_decompose(const Element& W);

// prod p^(floor(n/2)): the lcm of all critical divisors, which generates the
// critical ideal in a PID. 1 for non-critical W.
Element critical_ideal_generator(const CriticalData& cd);

struct PrimaryLabel {
  Element prime;  // canonical
  unsigned size;  // 1 <= size <= order - 1

  friend bool operator==(const PrimaryLabel&, const PrimaryLabel&) = default;
};

bool label_less(const PrimaryLabel& a, const PrimaryLabel& b);

struct MfClass {
  CriticalData critical_data;
  std::vector<PrimaryLabel> labels;  // sorted by (prime, size)

  bool is_zero() const { return labels.empty(); }
  friend bool operator==(const MfClass& a, const MfClass& b) {
    return a.critical_data.W == b.critical_data.W && a.labels == b.labels;
  }
};

// Sorts labels into canonical order and checks them against the critical data.
MfClass make_class(CriticalData cd, std::vector<PrimaryLabel> labels);

// ---------------------------------------------------------------------------
// Strong isomorphism

struct StrongDecomposition {
  std::vector<Element> factors;  // invariant factors d_1 | ... | d_rho of v
  Matrix A;                      // A * v * B^-1 = diag(factors)
  Matrix B;
  MatrixFactorization normal_form;  // e_{d_1} + ... + e_{d_rho}

  // U_D = diag(A, B); satisfies U_D * D = D_0 * U_D.
  Matrix witness() const { return direct_sum(A, B); }
};

StrongDecomposition strong_decompose(const MatrixFactorization& a);

// Requires equal W.
bool strong_iso(const MatrixFactorization& a, const MatrixFactorization& b);

// e_{v1} + e_{v2} is strongly isomorphic to e_{gcd} + e_{lcm}.
std::pair<Element, Element> merge_pair(const Element& v1, const Element& v2, const Element& W);

// Every elementary summand e_d of the strong decomposition has gcd(d, W/d) = 1.
bool is_zero_object(const MatrixFactorization& a);

// ---------------------------------------------------------------------------
// Morphisms between elementary factorizations

// Any cocycle e_{v1} -> e_{v2} equals r * diag(v2/d, v1/d); returns r.
Element elementary_scalar(const MfMorphism& f);

struct ConeSplit {
  Element xi;
  Element zeta;
};

// xi = (v1, v2, u1, u2, r) * v1 / (v1, v2) and zeta = v1*u2/xi, both canonical.
// They are the invariant factors of the cone's u-block; the v-block has
// invariant factors W/zeta | W/xi.
ConeSplit cone_split(const MfMorphism& f);

// f is an isomorphism in hmf iff gcd(xi, W/xi) = gcd(zeta, W/zeta) = 1.
bool is_iso(const MfMorphism& f);

// ---------------------------------------------------------------------------
// hmf classes

MfClass primary_decompose(const MatrixFactorization& a, const CriticalData& cd);
MfClass primary_decompose(const MatrixFactorization& a);

// Requires equal W.
bool hmf_iso(const MatrixFactorization& a, const MatrixFactorization& b);

// Keeps the labels supported at the critical prime p.
MfClass localize_class(const MfClass& c, const Element& p);

// Class-level suspension: (p, i) -> (p, n_p - i).
MfClass suspend_class(const MfClass& c);

// Direct sum of e_{p^i} over the labels (the zero object for no labels).
MatrixFactorization realize_class(const MfClass& c);

}  // namespace edmf
