#include "edmf/hom.hpp"

namespace edmf {

namespace {

void require_same_potential(const MatrixFactorization& a, const MatrixFactorization& b) {
  require_same_ring(a.W(), b.W());
  if (a.W() != b.W())
    throw PreconditionError("hmf_hom: potentials differ (" + a.W().to_string() + " vs " +
                            b.W().to_string() + ")");
}

std::string hom_context(const MatrixFactorization& a) {
  return a.ring().to_string() + "/<" + canonical(a.W()).to_string() + ">";
}

struct Cohomology {
  Matrix kernel;
  SmithDecomposition kernel_snf;
  Matrix relations;
  ModuleInvariants module;
};

// ker(d_out) / im(d_in), with d_out * d_in = 0.
Cohomology cohomology(const Matrix& d_out, const Matrix& d_in, const std::string& context) {
  Matrix kernel = kernel_basis(d_out);
  SmithDecomposition ksnf = smith(kernel);
  auto relations = solve(ksnf, d_in);
  if (!relations) throw std::logic_error("hom complex: image not contained in kernel");
  auto module = image_cokernel_invariants(*relations);
  module.context = context;
  return {std::move(kernel), std::move(ksnf), std::move(*relations), std::move(module)};
}

}  // namespace

HomComplex hom_complex(const MatrixFactorization& a, const MatrixFactorization& b) {
  require_same_potential(a, b);
  const Ring& ring = a.ring();
  const std::size_t r1 = a.rho(), r2 = b.rho();
  const std::size_t block = r1 * r2;
  const Matrix id1 = Matrix::identity(ring, r1);
  const Matrix id2 = Matrix::identity(ring, r2);

  // (f00, f11) -> (v2 f11 - f00 v1, u2 f00 - f11 u1)
  Matrix d_even(ring, 2 * block, 2 * block);
  if (block > 0) {
    d_even.set_block(0, 0, -sandwich_operator(id2, a.v()));
    d_even.set_block(0, block, sandwich_operator(b.v(), id1));
    d_even.set_block(block, 0, sandwich_operator(b.u(), id1));
    d_even.set_block(block, block, -sandwich_operator(id2, a.u()));
  }
  // (s01, s10) -> (v2 s10 + s01 u1, u2 s01 + s10 v1)
  Matrix d_odd(ring, 2 * block, 2 * block);
  if (block > 0) {
    d_odd.set_block(0, 0, sandwich_operator(id2, a.u()));
    d_odd.set_block(0, block, sandwich_operator(b.v(), id1));
    d_odd.set_block(block, 0, sandwich_operator(b.u(), id1));
    d_odd.set_block(block, block, sandwich_operator(id2, a.v()));
  }
  return {std::move(d_even), std::move(d_odd)};
}

HomModules hmf_hom(const MatrixFactorization& a, const MatrixFactorization& b) {
  const auto cx = hom_complex(a, b);
  const std::string context = hom_context(a);
  auto even = cohomology(cx.d_even, cx.d_odd, context);
  auto odd = cohomology(cx.d_odd, cx.d_even, context);
  return {std::move(even.module), std::move(odd.module)};
}

HomPresentation even_hom_presentation(const MatrixFactorization& a, const MatrixFactorization& b) {
  const auto cx = hom_complex(a, b);
  auto h = cohomology(cx.d_even, cx.d_odd, hom_context(a));
  return {std::move(h.kernel), std::move(h.kernel_snf), std::move(h.relations), std::move(h.module)};
}

bool postcomposition_is_iso(const MfMorphism& f, const HomPresentation& from,
                            const HomPresentation& to, const MatrixFactorization& t) {
  const Ring& ring = t.ring();
  const std::size_t rt = t.rho();
  const std::size_t r1 = f.source().rho();
  const std::size_t k1 = from.cocycles.cols(), k2 = to.cocycles.cols();

  // Matrix of g -> f o g in cocycle coordinates.
  Matrix induced(ring, k2, k1);
  for (std::size_t c = 0; c < k1; ++c) {
    const Matrix g00 = unvectorize(from.cocycles, r1, rt, c, 0);
    const Matrix g11 = unvectorize(from.cocycles, r1, rt, c, r1 * rt);
    const Matrix image = vstack(vectorize(f.f00() * g00), vectorize(f.f11() * g11));
    const auto coords = solve(to.cocycle_snf, image);
    if (!coords) throw std::logic_error("postcomposition left the cocycle module");
    induced.set_block(0, c, *coords);
  }

  // Surjective iff [induced | relations] spans R^k2.
  const Matrix combined = hstack(induced, to.relations);
  if (!image_cokernel_invariants(combined).is_zero()) return false;
  if (k1 == 0) return true;

  // Injective iff every x with induced*x in im(relations) lies in im(from.relations).
  const Matrix syzygies = kernel_basis(combined);
  const Matrix preimages = syzygies.block(0, 0, k1, syzygies.cols());
  return solve(from.relations, preimages).has_value();
}

bool postcomposition_is_iso(const MfMorphism& f, const MatrixFactorization& t) {
  if (!is_cocycle(f)) throw ValidationError("postcomposition: morphism is not a cocycle");
  return postcomposition_is_iso(f, even_hom_presentation(t, f.source()),
                                even_hom_presentation(t, f.target()), t);
}

}  // namespace edmf
