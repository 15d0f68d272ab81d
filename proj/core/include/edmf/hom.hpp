#pragma once

// Morphism modules of the homotopy category hmf(R, W), computed from the
// Z/2-graded hom complex Hom(a, b) with differential d(f) = D_b f - (-1)^|f| f D_a.

#include "edmf/classify.hpp"
#include "edmf/module.hpp"
#include "edmf/smith.hpp"

namespace edmf {

struct HomModules {
  ModuleInvariants even;
  ModuleInvariants odd;

  friend bool operator==(const HomModules&, const HomModules&) = default;
};

// Requires equal W.
HomModules hmf_hom(const MatrixFactorization& a, const MatrixFactorization& b);

// Matrices of the hom complex differential on vectorized components.
// Even coordinates are [vec f00; vec f11], odd coordinates [vec s01; vec s10].
struct HomComplex {
  Matrix d_even;  // even -> odd
  Matrix d_odd;   // odd -> even
};

HomComplex hom_complex(const MatrixFactorization& a, const MatrixFactorization& b);

// H^even(a, b) = Z / B as a presented module: the columns of `cocycles`
// freely generate the even cocycles Z, and `relations` holds the
// coboundaries in those coordinates, so H^even = coker(relations).
struct HomPresentation {
  Matrix cocycles;
  SmithDecomposition cocycle_snf;
  Matrix relations;
  ModuleInvariants module;
};

HomPresentation even_hom_presentation(const MatrixFactorization& a, const MatrixFactorization& b);

// Does postcomposition with the cocycle f : a1 -> a2 induce an isomorphism
// H^even(t, a1) -> H^even(t, a2)?
bool postcomposition_is_iso(const MfMorphism& f, const MatrixFactorization& t);
bool postcomposition_is_iso(const MfMorphism& f, const HomPresentation& from,
                            const HomPresentation& to, const MatrixFactorization& t);

}  // namespace edmf
