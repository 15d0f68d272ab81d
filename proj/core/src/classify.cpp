#include "edmf/classify.hpp"

#include <algorithm>

namespace edmf {

namespace {

// Exponent of the prime p in the non-zero element d.
unsigned multiplicity(const Element& p, Element d) {
  unsigned e = 0;
  while (divides(p, d)) {
    d = exact_div(d, p);
    ++e;
  }
  return e;
}

CriticalData unit_critical_data(const Element& W) {
  return CriticalData{W, W, W.ring().one(), {}};
}

}  // namespace

unsigned CriticalData::order_of(const Element& prime) const {
  const Element c = canonical(prime);
  for (const auto& cp : critical)
    if (cp.prime == c) return cp.order;
  return 0;
}

CriticalData critical_decompose(const Element& W) {
  if (W.is_zero()) throw PreconditionError("critical_decompose: W = 0");
  if (W.is_unit()) throw PreconditionError("critical_decompose: W is a unit");
  const auto fac = factorize(W);
  CriticalData cd{W, fac.unit, W.ring().one(), {}};
  for (const auto& [p, n] : fac.factors) {
    if (n == 1)
      cd.W0 *= p;
    else
      cd.critical.push_back({p, n});
  }
  cd.W0 = canonical(cd.W0);
  return cd;
}

Element critical_ideal_generator(const CriticalData& cd) {
  Element g = cd.W.ring().one();
  for (const auto& cp : cd.critical) g *= pow(cp.prime, cp.order / 2);
  return g;
}

bool label_less(const PrimaryLabel& a, const PrimaryLabel& b) {
  const auto c = canonical_order(a.prime, b.prime);
  if (c != 0) return c < 0;
  return a.size < b.size;
}

MfClass make_class(CriticalData cd, std::vector<PrimaryLabel> labels) {
  for (auto& l : labels) {
    l.prime = canonical(l.prime);
    const unsigned n = cd.order_of(l.prime);
    if (n == 0)
      throw PreconditionError("label prime " + l.prime.to_string() + " is not critical for W = " +
                              cd.W.to_string());
    if (l.size < 1 || l.size > n - 1)
      throw PreconditionError("label size " + std::to_string(l.size) + " outside [1, " +
                              std::to_string(n - 1) + "]");
  }
  std::sort(labels.begin(), labels.end(), label_less);
  return MfClass{std::move(cd), std::move(labels)};
}

// ---------------------------------------------------------------------------

StrongDecomposition strong_decompose(const MatrixFactorization& a) {
  auto snf = smith(a.v());
  // v has full rank because W != 0, so every invariant factor is non-zero.
  MatrixFactorization normal = MatrixFactorization::zero_object(a.W());
  for (const auto& d : snf.invariant_factors) normal = direct_sum(normal, elementary(d, a.W()));
  return StrongDecomposition{std::move(snf.invariant_factors), std::move(snf.U), std::move(snf.V),
                             std::move(normal)};
}

bool strong_iso(const MatrixFactorization& a, const MatrixFactorization& b) {
  require_same_ring(a.W(), b.W());
  if (a.W() != b.W()) throw PreconditionError("strong_iso: potentials differ");
  return a.rho() == b.rho() && invariant_factors(a.v()) == invariant_factors(b.v());
}

std::pair<Element, Element> merge_pair(const Element& v1, const Element& v2, const Element& W) {
  if (!divides(v1, W) || !divides(v2, W))
    throw PreconditionError("merge_pair: arguments must divide W");
  return {gcd(v1, v2), lcm(v1, v2)};
}

bool is_zero_object(const MatrixFactorization& a) {
  for (const auto& d : invariant_factors(a.v()))
    if (!gcd(d, exact_div(a.W(), d)).is_unit()) return false;
  return true;
}

// ---------------------------------------------------------------------------

Element elementary_scalar(const MfMorphism& f) {
  if (f.source().rho() != 1 || f.target().rho() != 1)
    throw PreconditionError("expected a morphism between elementary factorizations");
  if (!is_cocycle(f)) throw ValidationError("morphism is not a cocycle");
  const Element& v1 = f.source().v()(0, 0);
  const Element& v2 = f.target().v()(0, 0);
  const Element d = gcd(v1, v2);
  return exact_div(f.f11()(0, 0), exact_div(v1, d));
}

ConeSplit cone_split(const MfMorphism& f) {
  const Element r = elementary_scalar(f);
  const Element& v1 = f.source().v()(0, 0);
  const Element& v2 = f.target().v()(0, 0);
  const Element& u1 = f.source().u()(0, 0);
  const Element& u2 = f.target().u()(0, 0);
  const Element s = gcd(gcd(gcd(v1, v2), gcd(u1, u2)), r);
  const Element xi = canonical(s * exact_div(v1, gcd(v1, v2)));
  const Element zeta = canonical(exact_div(v1 * u2, xi));
  return {xi, zeta};
}

bool is_iso(const MfMorphism& f) {
  const auto [xi, zeta] = cone_split(f);
  const Element& W = f.source().W();
  return gcd(xi, exact_div(W, xi)).is_unit() && gcd(zeta, exact_div(W, zeta)).is_unit();
}

// ---------------------------------------------------------------------------

MfClass primary_decompose(const MatrixFactorization& a, const CriticalData& cd) {
  if (cd.W != a.W())
    throw PreconditionError("primary_decompose: critical data is for W = " + cd.W.to_string() +
                            ", factorization has W = " + a.W().to_string());
  std::vector<PrimaryLabel> labels;
  for (const auto& d : invariant_factors(a.v())) {
    for (const auto& [p, n] : cd.critical) {
      const unsigned k = multiplicity(p, d);
      if (k >= 1 && k <= n - 1) labels.push_back({p, k});
    }
  }
  return make_class(cd, std::move(labels));
}

MfClass primary_decompose(const MatrixFactorization& a) {
  if (a.W().is_unit()) return MfClass{unit_critical_data(a.W()), {}};
  return primary_decompose(a, critical_decompose(a.W()));
}

bool hmf_iso(const MatrixFactorization& a, const MatrixFactorization& b) {
  require_same_ring(a.W(), b.W());
  if (a.W() != b.W()) throw PreconditionError("hmf_iso: potentials differ");
  if (a.W().is_unit()) return true;
  const auto cd = critical_decompose(a.W());
  return primary_decompose(a, cd).labels == primary_decompose(b, cd).labels;
}

MfClass localize_class(const MfClass& c, const Element& p) {
  const Element prime = canonical(p);
  if (c.critical_data.order_of(prime) == 0)
    throw PreconditionError("localize_class: " + prime.to_string() + " is not a critical prime");
  MfClass out{c.critical_data, {}};
  for (const auto& l : c.labels)
    if (l.prime == prime) out.labels.push_back(l);
  return out;
}

MfClass suspend_class(const MfClass& c) {
  std::vector<PrimaryLabel> labels;
  labels.reserve(c.labels.size());
  for (const auto& l : c.labels) labels.push_back({l.prime, c.critical_data.order_of(l.prime) - l.size});
  return make_class(c.critical_data, std::move(labels));
}

MatrixFactorization realize_class(const MfClass& c) {
  const Element& W = c.critical_data.W;
  MatrixFactorization acc = MatrixFactorization::zero_object(W);
  for (const auto& l : c.labels) acc = direct_sum(acc, elementary(pow(l.prime, l.size), W));
  return acc;
}

}  // namespace edmf
