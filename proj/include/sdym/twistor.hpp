#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "sdym/laurent.hpp"

namespace sdym {

/// Representative f = sum c * p1^d1 * p2^d2 * w^k of a twistor cohomology
/// class, restricted to Laurent polynomials in w (poles only at 0 and
/// infinity). p1 = u - w*vbar, p2 = v + w*ubar.
class TwistorRep {
 public:
  using Key = std::tuple<int, int, int>;  // (d1, d2, k)

  TwistorRep() = default;

  void add_term(int d1, int d2, int k, C64 c);
  const std::map<Key, C64>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// f as a Laurent polynomial in w with coefficients in (u, ubar, v, vbar).
  Laurent<PolyC> expand_w() const;

  /// Numeric evaluation at a base point and contour node w.
  C64 eval(const R4Point& pt, const C64& w) const;

  /// f = p1*p2/w^2, the representative of |u|^2 - |v|^2.
  static TwistorRep algebraically_special();

 private:
  std::map<Key, C64> terms_;
};

/// Circular contour |w| = radius sampled at equispaced nodes. The trapezoid
/// rule is spectrally exact for trigonometric polynomials once
/// nodes >= 2*bandwidth + 2.
struct ContourSpec {
  double radius = 1.0;
  int nodes = 64;

  static ContourSpec for_bandwidth(int bw) { return {1.0, 2 * bw + 8}; }
};

/// Harmonic function from a representative, exact residue mode:
/// the coefficient of w^{-1} in the expansion of f.
PolyC penrose_exact(const TwistorRep& f);

/// Trapezoid-quadrature evaluation of (1/2*pi*i) \oint f dw at a point.
/// Throws when the node count cannot resolve the integrand's bandwidth.
C64 penrose_quadrature(const TwistorRep& f, const R4Point& pt,
                       const ContourSpec& c = {});

/// Cauchy-kernel transform, exact residue mode: the Laurent-in-z series with
/// polynomial coefficients whose value is
/// (1/2*pi*i) \oint (w+z)/(w-z) f dw for |z| < radius.
/// Its z^0 coefficient equals penrose_exact(f).
Laurent<PolyC> cauchy_exact(const TwistorRep& f);

/// Quadrature evaluation of the Cauchy transform at (pt, z); |z| must differ
/// from the contour radius.
C64 cauchy_quadrature(const TwistorRep& f, const R4Point& pt, const C64& z,
                      const ContourSpec& c = {});

/// Patching matrix in exponential form G(x, z) = exp(phi(x, z) tau3).
struct PatchingMatrix {
  Laurent<PolyC> phi;

  /// Value of the exponent at (pt, z ~= unit circle).
  C64 phi_at(const R4Point& pt, const C64& z) const;
  /// G(pt, z) = diag(e^phi, e^-phi).
  Mat2C value(const R4Point& pt, const C64& z) const;
  /// Samples on |z| = 1 at n equispaced nodes.
  std::vector<Mat2C> unit_circle_samples(const R4Point& pt, int n) const;
};

/// Assemble the patching exponent phi = (F + F*)/2 from a representative.
/// Checks that the induced harmonic function is real, that phi satisfies the
/// coefficient-wise twistor relations and that phi* = phi; throws
/// std::domain_error on a bad representative.
PatchingMatrix patching_from_rep(const TwistorRep& f);

/// Coefficient-wise twistor annihilation residuals of a scalar exponent:
/// first entry (d_ubar phi_n - d_v phi_{n-1}), second (d_vbar phi_n + d_u
/// phi_{n-1}); both must vanish identically for a valid patching exponent.
std::pair<Laurent<PolyC>, Laurent<PolyC>> twistor_annihilation_residual(
    const Laurent<PolyC>& phi);

/// Residuals of the associated linear problem for a finite Laurent series
/// Psi with matrix-polynomial coefficients against connection components:
/// R1 = (d_vbar + z d_u) Psi + (A_vbar + z A_u) Psi,
/// R2 = (d_ubar - z d_v) Psi + (A_ubar - z A_v) Psi.
template <class K>
std::pair<Laurent<MatrixPoly<K>>, Laurent<MatrixPoly<K>>> alp_residual(
    const Laurent<MatrixPoly<K>>& psi, const MatrixPoly<K>& Au,
    const MatrixPoly<K>& Av, const MatrixPoly<K>& Aubar,
    const MatrixPoly<K>& Avbar) {
  Laurent<MatrixPoly<K>> r1, r2;
  const int lo = psi.empty() ? 0 : psi.nmin();
  const int hi = psi.empty() ? 0 : psi.nmax() + 1;
  for (int n = lo; n <= hi; ++n) {
    MatrixPoly<K> pn = psi.coeff(n), pm = psi.coeff(n - 1);
    MatrixPoly<K> a = derive(pn, Var::vbar) + derive(pm, Var::u) + Avbar * pn +
                      Au * pm;
    MatrixPoly<K> b = derive(pn, Var::ubar) - derive(pm, Var::v) + Aubar * pn -
                      Av * pm;
    if (!is_zero(a)) r1.set(n, std::move(a));
    if (!is_zero(b)) r2.set(n, std::move(b));
  }
  return {std::move(r1), std::move(r2)};
}

/// Same residuals for a diagonal solution written as Psi = exp(psi tau3)
/// with a reducible connection built from the harmonic function a; exact on
/// the exponent. Zero iff Psi solves the linear problem.
std::pair<Laurent<PolyC>, Laurent<PolyC>> alp_exponent_residual(
    const Laurent<PolyC>& psi, const PolyC& a);

}  // namespace sdym
