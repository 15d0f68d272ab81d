#pragma once

// Finite-rank matrix factorizations of a non-zero potential W.
//
// An object is a pair of square matrices (u, v) with u*v = v*u = W*I,
// identified with the odd operator D = [[0, v], [u, 0]] on R^{rho|rho}.
// An even morphism a1 -> a2 is a pair (f00, f11) of rho2 x rho1 matrices;
// it is a cocycle when v2*f11 = f00*v1 and u2*f00 = f11*u1.

#include <optional>

#include "edmf/matrix.hpp"

namespace edmf {

class MatrixFactorization {
 public:
  // Validates shapes, W != 0 and the product identity; throws
  // ValidationError otherwise.
  MatrixFactorization(Matrix u, Matrix v, Element W);

  // The rho = 0 object.
  static MatrixFactorization zero_object(const Element& W);

  const Ring& ring() const { return W_.ring(); }
  const Element& W() const { return W_; }
  std::size_t rho() const { return u_.rows(); }
  const Matrix& u() const { return u_; }
  const Matrix& v() const { return v_; }

  // The 2rho x 2rho odd operator [[0, v], [u, 0]].
  Matrix differential() const;

  friend bool operator==(const MatrixFactorization&, const MatrixFactorization&) = default;

 private:
  Matrix u_;
  Matrix v_;
  Element W_;
};

MatrixFactorization make_factorization(Matrix u, Matrix v, Element W);

// e_v = [[0, v], [W/v, 0]]; requires v | W.
MatrixFactorization elementary(const Element& v, const Element& W);

// u' = -v, v' = -u. An involution on objects.
MatrixFactorization suspension(const MatrixFactorization& a);

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b);

// Factorization of s*W with v -> s*v, u unchanged; s must be a unit.
MatrixFactorization scale_potential(const MatrixFactorization& a, const Element& s);

// Even element of the hom complex a1 -> a2. Construction checks shapes
// only; is_cocycle() decides whether it is a morphism of zmf.
class MfMorphism {
 public:
  MfMorphism(MatrixFactorization source, MatrixFactorization target, Matrix f00, Matrix f11);

  const MatrixFactorization& source() const { return source_; }
  const MatrixFactorization& target() const { return target_; }
  const Matrix& f00() const { return f00_; }
  const Matrix& f11() const { return f11_; }

  friend bool operator==(const MfMorphism&, const MfMorphism&) = default;

 private:
  MatrixFactorization source_;
  MatrixFactorization target_;
  Matrix f00_;
  Matrix f11_;
};

// Checked constructor: throws ValidationError unless the result is a cocycle.
MfMorphism make_morphism(MatrixFactorization source, MatrixFactorization target, Matrix f00,
                         Matrix f11);

MfMorphism identity_morphism(const MatrixFactorization& a);
MfMorphism zero_morphism(const MatrixFactorization& source, const MatrixFactorization& target);
// g o f; requires f.target() == g.source().
MfMorphism compose(const MfMorphism& g, const MfMorphism& f);
MfMorphism operator+(const MfMorphism& f, const MfMorphism& g);
MfMorphism operator*(const Element& r, const MfMorphism& f);

// Sigma f between the suspended objects: the components trade places.
MfMorphism suspend_morphism(const MfMorphism& f);

// Transport of f along scale_potential; components are unchanged.
MfMorphism scale_morphism(const MfMorphism& f, const Element& s);

// The morphism e_{v1} -> e_{v2} given by r * diag(v2/d, v1/d), d = gcd(v1, v2).
MfMorphism elementary_morphism(const MatrixFactorization& source,
                               const MatrixFactorization& target, const Element& r);

bool is_cocycle(const MfMorphism& f);

// Odd element (s01 : M1^1 -> M2^0, s10 : M1^0 -> M2^1) whose differential is f:
// f00 = v2*s10 + s01*u1 and f11 = u2*s01 + s10*v1.
struct Homotopy {
  Matrix s01;
  Matrix s10;
};

// Solves for a homotopy over the ring; nullopt when f is not null-homotopic.
std::optional<Homotopy> null_homotopy(const MfMorphism& f);
inline bool is_null_homotopic(const MfMorphism& f) { return null_homotopy(f).has_value(); }

// Mapping cone with u = [[-v1, 0], [f11, u2]], v = [[-u1, 0], [f00, v2]].
MatrixFactorization cone(const MfMorphism& f);

// a1 --f--> a2 --phi--> C(f) --psi--> Sigma a1
struct Triangle {
  MatrixFactorization a1;
  MatrixFactorization a2;
  MatrixFactorization cone;
  MfMorphism f;
  MfMorphism phi;
  MfMorphism psi;
};

Triangle cone_triangle(const MfMorphism& f);

}  // namespace edmf
