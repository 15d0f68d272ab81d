#include "edmf/artinian.hpp"

#include <algorithm>

#include "edmf/classify.hpp"
#include "edmf/hom.hpp"

namespace edmf {

namespace {

void check_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi)
    throw PreconditionError(std::string(what) + ": index " + std::to_string(value) +
                            " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace

LambdaContext::LambdaContext(const Element& p, int n) : p_(canonical(p)), n_(n) {
  if (n < 2) throw PreconditionError("A_n(p) needs n >= 2, got " + std::to_string(n));
  if (!is_prime(p_)) throw PreconditionError(p_.to_string() + " is not prime");
}

int delta(int n, int i) {
  check_range(i, 0, n, "delta");
  return std::min(i, n - i);
}

int mu(int n, int i, int j) {
  check_range(i, 0, n, "mu");
  check_range(j, 0, n, "mu");
  return std::min(delta(n, i), delta(n, j));
}

int hom_module(const LambdaContext& ctx, int i, int j) {
  check_range(i, 0, ctx.n(), "hom_module");
  check_range(j, 0, ctx.n(), "hom_module");
  return std::min(i, j);
}

int stable_hom(const LambdaContext& ctx, int i, int j) {
  check_range(i, 1, ctx.n() - 1, "stable_hom");
  check_range(j, 1, ctx.n() - 1, "stable_hom");
  return mu(ctx.n(), i, j);
}

Element hom_cyclic(const Element& a, const Element& b, const Element& c) {
  require_same_ring(a, b);
  require_same_ring(a, c);
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw PreconditionError("hom_cyclic: arguments must be non-zero");
  if (!divides(a, c) || !divides(b, c))
    throw PreconditionError("hom_cyclic: a and b must divide c");
  return gcd(a, b);
}

int syzygy(const LambdaContext& ctx, int i) {
  check_range(i, 1, ctx.n(), "syzygy");
  return ctx.n() - i;
}

int quotient(const LambdaContext& ctx, int i, int j) {
  check_range(i, 0, ctx.n(), "quotient");
  check_range(j, 0, i, "quotient");
  return i - j;
}

int CyclicDecomposition::length() const {
  int total = 0;
  for (const auto& [i, count] : multiplicities) total += i * count;
  return total;
}

CyclicDecomposition decompose_module(const LambdaContext& ctx, const std::vector<int>& exponents) {
  CyclicDecomposition d{ctx, {}};
  for (int k : exponents) {
    check_range(k, 0, ctx.n(), "decompose_module");
    if (k > 0) ++d.multiplicities[k];
  }
  return d;
}

CyclicDecomposition decompose_module(const LambdaContext& ctx,
                                     const std::vector<Element>& annihilators) {
  std::vector<int> exponents;
  exponents.reserve(annihilators.size());
  for (const auto& a : annihilators) {
    require_same_ring(a, ctx.p());
    if (a.is_zero()) throw PreconditionError("decompose_module: zero annihilator");
    Element rest = a;
    int k = 0;
    while (divides(ctx.p(), rest)) {
      rest = exact_div(rest, ctx.p());
      ++k;
    }
    if (!rest.is_unit())
      throw PreconditionError("decompose_module: " + a.to_string() + " is not a power of " +
                              ctx.p().to_string());
    exponents.push_back(k);
  }
  return decompose_module(ctx, exponents);
}

ARSequence ar_sequence(const LambdaContext& ctx, int i) {
  check_range(i, 1, ctx.n() - 1, "ar_sequence");
  return {i, decompose_module(ctx, std::vector<int>{i - 1, i + 1}), i};
}

ARQuiver ar_quiver(const LambdaContext& ctx, bool stable) {
  const int n = ctx.n();
  const int top = stable ? n - 1 : n;
  ARQuiver q{n, stable, {}, {}, {}};
  for (int i = 1; i <= top; ++i) {
    q.vertices.push_back(i);
    q.translation[i] = (!stable && i == n) ? std::nullopt : std::optional<int>(i);
  }
  for (int i = 1; i < top; ++i) {
    q.arrows.push_back({i, i + 1});
    q.arrows.push_back({i + 1, i});
  }
  return q;
}

bool serre_identity(const LambdaContext& ctx) {
  const int n = ctx.n();
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (mu(n, i, j) != mu(n, j, n - i)) return false;
  return true;
}

bool cok_crosscheck(const LambdaContext& ctx) {
  const int n = ctx.n();
  const Element& p = ctx.p();
  const Element W = pow(p, static_cast<unsigned>(n));
  std::vector<MatrixFactorization> primaries;
  for (int i = 1; i <= n - 1; ++i) primaries.push_back(elementary(pow(p, i), W));

  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      const auto hom = hmf_hom(primaries[i - 1], primaries[j - 1]).even;
      const int m = stable_hom(ctx, i, j);
      std::vector<Element> expected;
      if (m > 0) expected.push_back(pow(p, m));
      if (hom.cyclic_factors != expected) return false;
    }
  }

  const auto cd = critical_decompose(W);
  for (int i = 1; i <= n - 1; ++i) {
    const MfClass c = make_class(cd, {{p, static_cast<unsigned>(i)}});
    const MfClass s = suspend_class(c);
    if (s.labels.size() != 1 || static_cast<int>(s.labels[0].size) != syzygy(ctx, i)) return false;
    if (primary_decompose(suspension(primaries[i - 1]), cd) != s) return false;
  }
  return true;
}

}  // namespace edmf
