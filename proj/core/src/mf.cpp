#include "edmf/mf.hpp"

#include "edmf/smith.hpp"

namespace edmf {

namespace {

Matrix scalar_identity(const Element& s, std::size_t n) {
  return s * Matrix::identity(s.ring(), n);
}

void require_same_potential(const MatrixFactorization& a, const MatrixFactorization& b,
                            const char* what) {
  require_same_ring(a.W(), b.W());
  if (a.W() != b.W())
    throw PreconditionError(std::string(what) + ": potentials differ (" + a.W().to_string() +
                            " vs " + b.W().to_string() + ")");
}

}  // namespace

MatrixFactorization::MatrixFactorization(Matrix u, Matrix v, Element W)
    : u_(std::move(u)), v_(std::move(v)), W_(std::move(W)) {
  if (W_.is_zero()) throw ValidationError("matrix factorization of W = 0");
  if (u_.ring() != W_.ring() || v_.ring() != W_.ring())
    throw MixedRingError("factorization matrices and W live in different rings");
  if (!u_.is_square() || !v_.is_square() || u_.rows() != v_.rows())
    throw ValidationError("u and v must be square of equal size");
  const Matrix target = scalar_identity(W_, u_.rows());
  if (u_ * v_ != target) throw ValidationError("u*v != W*I for W = " + W_.to_string());
  if (v_ * u_ != target) throw ValidationError("v*u != W*I for W = " + W_.to_string());
}

MatrixFactorization MatrixFactorization::zero_object(const Element& W) {
  return MatrixFactorization(Matrix(W.ring(), 0, 0), Matrix(W.ring(), 0, 0), W);
}

Matrix MatrixFactorization::differential() const {
  const std::size_t r = rho();
  return block2x2(Matrix(ring(), r, r), v_, u_, Matrix(ring(), r, r));
}

MatrixFactorization make_factorization(Matrix u, Matrix v, Element W) {
  return MatrixFactorization(std::move(u), std::move(v), std::move(W));
}

MatrixFactorization elementary(const Element& v, const Element& W) {
  require_same_ring(v, W);
  if (W.is_zero()) throw ValidationError("matrix factorization of W = 0");
  if (!divides(v, W))
    throw PreconditionError("elementary: " + v.to_string() + " does not divide " + W.to_string());
  return MatrixFactorization(Matrix::scalar(exact_div(W, v)), Matrix::scalar(v), W);
}

MatrixFactorization suspension(const MatrixFactorization& a) {
  return MatrixFactorization(-a.v(), -a.u(), a.W());
}

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b) {
  require_same_potential(a, b, "direct_sum");
  return MatrixFactorization(direct_sum(a.u(), b.u()), direct_sum(a.v(), b.v()), a.W());
}

MatrixFactorization scale_potential(const MatrixFactorization& a, const Element& s) {
  require_same_ring(a.W(), s);
  if (!s.is_unit()) throw PreconditionError("scale_potential: " + s.to_string() + " is not a unit");
  return MatrixFactorization(a.u(), s * a.v(), s * a.W());
}

// ---------------------------------------------------------------------------

MfMorphism::MfMorphism(MatrixFactorization source, MatrixFactorization target, Matrix f00,
                       Matrix f11)
    : source_(std::move(source)),
      target_(std::move(target)),
      f00_(std::move(f00)),
      f11_(std::move(f11)) {
  require_same_potential(source_, target_, "morphism");
  const std::size_t r1 = source_.rho(), r2 = target_.rho();
  for (const Matrix* m : {&f00_, &f11_}) {
    if (m->ring() != source_.ring()) throw MixedRingError("morphism component from another ring");
    if (m->rows() != r2 || m->cols() != r1)
      throw ValidationError("morphism components must be " + std::to_string(r2) + "x" +
                            std::to_string(r1));
  }
}

bool is_cocycle(const MfMorphism& f) {
  const auto& a1 = f.source();
  const auto& a2 = f.target();
  return a2.v() * f.f11() == f.f00() * a1.v() && a2.u() * f.f00() == f.f11() * a1.u();
}

MfMorphism make_morphism(MatrixFactorization source, MatrixFactorization target, Matrix f00,
                         Matrix f11) {
  MfMorphism f(std::move(source), std::move(target), std::move(f00), std::move(f11));
  if (!is_cocycle(f)) throw ValidationError("morphism is not a cocycle");
  return f;
}

MfMorphism identity_morphism(const MatrixFactorization& a) {
  const Matrix id = Matrix::identity(a.ring(), a.rho());
  return MfMorphism(a, a, id, id);
}

MfMorphism zero_morphism(const MatrixFactorization& source, const MatrixFactorization& target) {
  const Matrix z(source.ring(), target.rho(), source.rho());
  return MfMorphism(source, target, z, z);
}

MfMorphism compose(const MfMorphism& g, const MfMorphism& f) {
  if (f.target() != g.source()) throw PreconditionError("compose: target/source mismatch");
  return MfMorphism(f.source(), g.target(), g.f00() * f.f00(), g.f11() * f.f11());
}

MfMorphism operator+(const MfMorphism& f, const MfMorphism& g) {
  if (f.source() != g.source() || f.target() != g.target())
    throw PreconditionError("morphism sum: endpoints differ");
  return MfMorphism(f.source(), f.target(), f.f00() + g.f00(), f.f11() + g.f11());
}

MfMorphism operator*(const Element& r, const MfMorphism& f) {
  return MfMorphism(f.source(), f.target(), r * f.f00(), r * f.f11());
}

MfMorphism suspend_morphism(const MfMorphism& f) {
  return MfMorphism(suspension(f.source()), suspension(f.target()), f.f11(), f.f00());
}

MfMorphism scale_morphism(const MfMorphism& f, const Element& s) {
  return MfMorphism(scale_potential(f.source(), s), scale_potential(f.target(), s), f.f00(),
                    f.f11());
}

MfMorphism elementary_morphism(const MatrixFactorization& source,
                               const MatrixFactorization& target, const Element& r) {
  require_same_potential(source, target, "elementary_morphism");
  if (source.rho() != 1 || target.rho() != 1)
    throw PreconditionError("elementary_morphism: endpoints must be elementary (rho = 1)");
  require_same_ring(source.W(), r);
  const Element& v1 = source.v()(0, 0);
  const Element& v2 = target.v()(0, 0);
  const Element d = gcd(v1, v2);
  return make_morphism(source, target, Matrix::scalar(r * exact_div(v2, d)),
                       Matrix::scalar(r * exact_div(v1, d)));
}

std::optional<Homotopy> null_homotopy(const MfMorphism& f) {
  const auto& a1 = f.source();
  const auto& a2 = f.target();
  const Ring& ring = a1.ring();
  const std::size_t r1 = a1.rho(), r2 = a2.rho();
  const std::size_t block = r1 * r2;
  if (block == 0) return Homotopy{Matrix(ring, r2, r1), Matrix(ring, r2, r1)};

  const Matrix id1 = Matrix::identity(ring, r1);
  const Matrix id2 = Matrix::identity(ring, r2);
  // Unknowns [vec s01; vec s10]; equations [vec f00; vec f11].
  Matrix system(ring, 2 * block, 2 * block);
  system.set_block(0, 0, sandwich_operator(id2, a1.u()));
  system.set_block(0, block, sandwich_operator(a2.v(), id1));
  system.set_block(block, 0, sandwich_operator(a2.u(), id1));
  system.set_block(block, block, sandwich_operator(id2, a1.v()));

  const Matrix rhs = vstack(vectorize(f.f00()), vectorize(f.f11()));
  const auto solution = solve(system, rhs);
  if (!solution) return std::nullopt;
  return Homotopy{unvectorize(*solution, r2, r1, 0, 0), unvectorize(*solution, r2, r1, 0, block)};
}

MatrixFactorization cone(const MfMorphism& f) {
  if (!is_cocycle(f)) throw ValidationError("cone: morphism is not a cocycle");
  const auto& a1 = f.source();
  const auto& a2 = f.target();
  const Matrix z12(a1.ring(), a1.rho(), a2.rho());
  Matrix u = block2x2(-a1.v(), z12, f.f11(), a2.u());
  Matrix v = block2x2(-a1.u(), z12, f.f00(), a2.v());
  return MatrixFactorization(std::move(u), std::move(v), a1.W());
}

Triangle cone_triangle(const MfMorphism& f) {
  MatrixFactorization c = cone(f);
  const auto& a1 = f.source();
  const auto& a2 = f.target();
  const Ring& ring = a1.ring();
  const std::size_t r1 = a1.rho(), r2 = a2.rho();

  // a2 -> C(f): inclusion of the second summand in both degrees.
  const Matrix incl = vstack(Matrix(ring, r1, r2), Matrix::identity(ring, r2));
  MfMorphism phi = make_morphism(a2, c, incl, incl);
  // C(f) -> Sigma a1: projection onto the first summand in both degrees.
  const Matrix proj = hstack(Matrix::identity(ring, r1), Matrix(ring, r1, r2));
  MfMorphism psi = make_morphism(c, suspension(a1), proj, proj);

  return Triangle{a1, a2, std::move(c), f, std::move(phi), std::move(psi)};
}

}  // namespace edmf
