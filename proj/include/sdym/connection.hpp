#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sdym/laurent.hpp"
#include "sdym/polyfield.hpp"

namespace sdym {

/// Gauge connection in the complex coordinates: the four components
/// (A_u, A_v, A_ubar, A_vbar), each a traceless matrix polynomial.
template <class K>
struct Connection4 {
  MatrixPoly<K> Au, Av, Aubar, Avbar;

  static Connection4 flat() { return {}; }
};

using ConnectionC = Connection4<C64>;
using ConnectionQ = Connection4<RatC>;

/// The six independent curvature components F_ab = d_a A_b - d_b A_a + [A_a, A_b].
template <class K>
struct Curvature4 {
  MatrixPoly<K> Fuv, Fuubar, Fvvbar, Fubarvbar, Fuvbar, Fvubar;
};

template <class K>
Curvature4<K> curvature(const Connection4<K>& A) {
  Curvature4<K> F;
  F.Fuv = derive(A.Av, Var::u) - derive(A.Au, Var::v) + commutator(A.Au, A.Av);
  F.Fuubar = derive(A.Aubar, Var::u) - derive(A.Au, Var::ubar) +
             commutator(A.Au, A.Aubar);
  F.Fvvbar = derive(A.Avbar, Var::v) - derive(A.Av, Var::vbar) +
             commutator(A.Av, A.Avbar);
  F.Fubarvbar = derive(A.Avbar, Var::ubar) - derive(A.Aubar, Var::vbar) +
                commutator(A.Aubar, A.Avbar);
  F.Fuvbar = derive(A.Avbar, Var::u) - derive(A.Au, Var::vbar) +
             commutator(A.Au, A.Avbar);
  F.Fvubar = derive(A.Aubar, Var::v) - derive(A.Av, Var::ubar) +
             commutator(A.Av, A.Aubar);
  return F;
}

/// Residual triple of the self-duality equations:
/// (F_uv, F_uubar + F_vvbar, F_ubarvbar). All three vanish iff A is self-dual.
template <class K>
std::array<MatrixPoly<K>, 3> sdym_residual(const Connection4<K>& A) {
  Curvature4<K> F = curvature(A);
  return {std::move(F.Fuv), F.Fuubar + F.Fvvbar, std::move(F.Fubarvbar)};
}

/// Components of the reducible connection A = (1/2)(da - dbar a) tau3 for a
/// scalar field a; no validation (used by tests probing non-harmonic seeds).
template <class K>
Connection4<K> reducible_components(const Poly<K>& a) {
  const auto t3 = pauli_tau<Poly<K>>(3);
  const K half = RingIO<K>::from_ci(1, 0) / RingIO<K>::from_ci(2, 0);
  Connection4<K> A;
  A.Au = t3 * (a.derive(Var::u) * half);
  A.Av = t3 * (a.derive(Var::v) * half);
  A.Aubar = t3 * (-(a.derive(Var::ubar) * half));
  A.Avbar = t3 * (-(a.derive(Var::vbar) * half));
  return A;
}

/// Reducible self-dual connection from a real harmonic function. Rejects
/// non-harmonic or non-real seeds (throws std::invalid_argument).
template <class K>
Connection4<K> reducible_from_harmonic(const Poly<K>& a, double tol = 0.0) {
  if (!a.is_harmonic(tol))
    throw std::invalid_argument("reducible_from_harmonic: seed is not harmonic");
  if (!a.is_real_field(tol))
    throw std::invalid_argument("reducible_from_harmonic: seed is not real");
  return reducible_components(a);
}

/// Residuals d_c eta + [A_c, eta] of the parallel-section equation for
/// c in {u, v, ubar, vbar}.
template <class K>
std::array<MatrixPoly<K>, 4> parallel_section_residual(
    const Connection4<K>& A, const MatrixPoly<K>& eta) {
  return {derive(eta, Var::u) + commutator(A.Au, eta),
          derive(eta, Var::v) + commutator(A.Av, eta),
          derive(eta, Var::ubar) + commutator(A.Aubar, eta),
          derive(eta, Var::vbar) + commutator(A.Avbar, eta)};
}

/// Checkable predicate for special-unitary reality of a connection:
/// A_ubar = -(A_u)^dagger, A_vbar = -(A_v)^dagger as fields, all components
/// traceless.
template <class K>
bool is_su2_connection(const Connection4<K>& A, double tol = 0.0) {
  auto traceless = [&](const MatrixPoly<K>& m) { return m.trace().is_zero(tol); };
  return traceless(A.Au) && traceless(A.Av) && traceless(A.Aubar) &&
         traceless(A.Avbar) &&
         is_zero(A.Aubar + field_dagger(A.Au), tol) &&
         is_zero(A.Avbar + field_dagger(A.Av), tol);
}

// -- Yang J-function -----------------------------------------------------------

using MatrixField = std::function<Mat2C(const R4Point&)>;

/// Hermitian unit-determinant matrix field encoding a self-dual connection.
/// Carries an exact abelian representation J = exp(e(x) tau3) when available;
/// otherwise only pointwise samples.
class YangJ {
 public:
  static YangJ abelian(PolyC exponent);
  static YangJ sampled(MatrixField f);

  Mat2C operator()(const R4Point& pt) const { return sample_(pt); }
  bool exact() const { return exponent_.has_value(); }
  const std::optional<PolyC>& abelian_exponent() const { return exponent_; }

 private:
  YangJ() = default;
  std::optional<PolyC> exponent_;
  MatrixField sample_;
};

/// J = exp(a tau3) for a real harmonic polynomial (both properties enforced).
YangJ yang_j_from_a(const PolyC& a);

struct ResidualReport {
  double max = 0.0;
  R4Point argmax{};
};

/// Max-norm of J(pt) A(pt) + A(pt)^dagger J(pt) over the given points; A must
/// be holomorphic in (u, v).
ResidualReport ja_check(const YangJ& J, const MatrixPolyC& Ahol,
                        const std::vector<R4Point>& pts);

/// Sup over points of || d_u(J_ubar J^-1) + d_v(J_vbar J^-1) || with centered
/// differences of step h. Throws std::domain_error naming the stencil point
/// when det J degenerates there.
ResidualReport yang_pohlmeyer_residual(const MatrixField& J,
                                       const std::vector<R4Point>& pts,
                                       double h);

/// Exact symbolic residual for abelian J = exp(a tau3):
/// (d_u d_ubar a + d_v d_vbar a) tau3, one quarter of the Laplacian.
MatrixPolyC yang_pohlmeyer_exact(const PolyC& a);

/// J -> R^dagger J R for polynomial R, holomorphic in (u, v) with det R = 1
/// (both validated). Result is sample-backed.
YangJ gauge_transform_J(const YangJ& J, const MatrixPolyC& R);

/// Abelian exact variant: conjugating J = exp(a tau3) by R = exp(rho tau3)
/// with rho holomorphic gives exponent a + rho + conj(rho).
YangJ gauge_transform_abelian(const YangJ& J, const PolyC& rho);

/// Sup-norm residual of the linearised equation
/// d_u(J d_ubar(J^-1 Jdot) J^-1) + d_v(J d_vbar(J^-1 Jdot) J^-1)
/// by centered differences.
ResidualReport linearisation_residual(const MatrixField& J,
                                      const MatrixField& Jdot,
                                      const std::vector<R4Point>& pts,
                                      double h);

/// Exact mode for abelian J and Jdot = b J tau3: residual is
/// (d_u d_ubar b + d_v d_vbar b) tau3.
MatrixPolyC linearisation_exact(const PolyC& b);

// centered complex-coordinate derivatives of a matrix field
Mat2C fd_du(const MatrixField& f, const R4Point& pt, double h);
Mat2C fd_dubar(const MatrixField& f, const R4Point& pt, double h);
Mat2C fd_dv(const MatrixField& f, const R4Point& pt, double h);
Mat2C fd_dvbar(const MatrixField& f, const R4Point& pt, double h);

/// Memoizing wrapper keyed on exact coordinates; stencil offsets are computed
/// identically at every use, so bit-exact keys are reliable.
MatrixField memoized(MatrixField f);

}  // namespace sdym
