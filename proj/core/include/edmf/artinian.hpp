#pragma once

// Index calculus for the Artinian local ring A_n(p) = R/<p^n>. Its
// indecomposable modules are the cyclic V_i = R/<p^i>, 1 <= i <= n, so
// every statement below is arithmetic on the index i. V_0 is the zero
// module; V_n = A_n(p) is the unique indecomposable projective.

#include <map>
#include <optional>
#include <vector>

#include "edmf/ring.hpp"

namespace edmf {

class LambdaContext {
 public:
  // Requires p prime and n >= 2; stores the canonical associate of p.
  LambdaContext(const Element& p, int n);

  const Element& p() const { return p_; }
  int n() const { return n_; }

 private:
  Element p_;
  int n_;
};

// delta_n(i) = min(i, n - i), 0 <= i <= n.
int delta(int n, int i);
// mu_n(i, j) = min(delta_n(i), delta_n(j)), 0 <= i, j <= n.
int mu(int n, int i, int j);

// Hom(V_i, V_j) = V_min(i,j), 0 <= i, j <= n.
int hom_module(const LambdaContext& ctx, int i, int j);
// Stable hom modulo maps factoring through projectives: V_mu(i,j), 1 <= i, j <= n-1.
int stable_hom(const LambdaContext& ctx, int i, int j);
// Hom_{R/<c>}(R/<a>, R/<b>) = R/<gcd(a, b)>; requires a | c, b | c, all non-zero.
Element hom_cyclic(const Element& a, const Element& b, const Element& c);

// Omega(V_i) = V_{n-i}, 1 <= i <= n.
int syzygy(const LambdaContext& ctx, int i);
// V_i / V_j = V_{i-j}, 0 <= j <= i <= n.
int quotient(const LambdaContext& ctx, int i, int j);

struct CyclicDecomposition {
  LambdaContext context;
  std::map<int, int> multiplicities;  // i -> count of V_i, zero counts omitted

  int length() const;
  friend bool operator==(const CyclicDecomposition& a, const CyclicDecomposition& b) {
    return a.context.n() == b.context.n() && a.context.p() == b.context.p() &&
           a.multiplicities == b.multiplicities;
  }
};

// Counts the summands R/<p^k>; exponents must lie in [0, n], zeros are dropped.
CyclicDecomposition decompose_module(const LambdaContext& ctx, const std::vector<int>& exponents);
// Same, from annihilators p^k given as ring elements.
CyclicDecomposition decompose_module(const LambdaContext& ctx,
                                     const std::vector<Element>& annihilators);

// 0 -> V_i -> V_{i-1} + V_{i+1} -> V_i -> 0 for 1 <= i <= n-1.
struct ARSequence {
  int left;
  CyclicDecomposition middle;
  int right;
};

ARSequence ar_sequence(const LambdaContext& ctx, int i);

struct ARArrow {
  int from;
  int to;
  std::pair<int, int> valuation{1, 1};

  friend bool operator==(const ARArrow&, const ARArrow&) = default;
};

struct ARQuiver {
  int n;
  bool stable;
  std::vector<int> vertices;
  std::vector<ARArrow> arrows;
  std::map<int, std::optional<int>> translation;

  bool is_projective(int vertex) const { return !stable && vertex == n; }
};

ARQuiver ar_quiver(const LambdaContext& ctx, bool stable);

// mu_n(i, j) == mu_n(j, n - i) for all 1 <= i, j <= n-1.
bool serre_identity(const LambdaContext& ctx);

// Compares hmf_hom(e_{p^i}, e_{p^j}) over W = p^n against stable_hom for all
// 1 <= i, j <= n-1, and class-level suspension against Omega.
bool cok_crosscheck(const LambdaContext& ctx);

}  // namespace edmf
