#include "sdym/algebra.hpp"

namespace sdym {

Mat2C mat_exp2(const Mat2C& m) {
  if (!finite_entries(m)) throw std::invalid_argument("mat_exp2: non-finite entries");
  const C64 half_tr = m.trace() * 0.5;
  Mat2C m0 = m;
  m0.e[0] -= half_tr;
  m0.e[3] -= half_tr;
  const C64 s = std::sqrt(-m0.det());
  const C64 scale = std::exp(half_tr);
  Mat2C r = Mat2C::identity() * std::cosh(s) + m0 * sinhc(s);
  return r * scale;
}

Mat2C hermitian_sqrt(const Mat2C& h) {
  const double scale = std::max(1.0, mnorm(h));
  if (mnorm(h - dagger(h)) > 1e-12 * scale)
    throw std::domain_error("hermitian_sqrt: matrix is not Hermitian");
  const double tr = h.trace().real();
  const double det = h.det().real();
  if (tr <= 0 || det <= 0)
    throw std::domain_error("hermitian_sqrt: matrix is not positive-definite");
  const double sd = std::sqrt(det);
  return (h + Mat2C::identity() * C64{sd, 0}) * (1.0 / std::sqrt(tr + 2 * sd));
}

SpectralPoint sigma(const SpectralPoint& p) {
  if (p.infinite) return SpectralPoint::finite(C64{0, 0});
  if (p.z == C64{0, 0}) return SpectralPoint::infinity();
  return SpectralPoint::finite(-1.0 / std::conj(p.z));
}

Mat2C star_loop(const LoopFn& g, const SpectralPoint& z) {
  return dagger(g(sigma(z)));
}

}  // namespace sdym
