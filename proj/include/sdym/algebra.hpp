#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdym/util.hpp"

namespace sdym {

using Rat = boost::multiprecision::cpp_rational;

/// Complex number over an exact ring (rational coefficients for the exact
/// test mode; double arithmetic goes through std::complex instead).
template <class R>
struct ComplexT {
  R re{}, im{};

  ComplexT() = default;
  ComplexT(int n) : re(n), im(0) {}
  ComplexT(R r) : re(std::move(r)) {}
  ComplexT(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  ComplexT operator-() const { return {-re, -im}; }
  ComplexT& operator+=(const ComplexT& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexT& operator-=(const ComplexT& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ComplexT operator+(ComplexT a, const ComplexT& b) { return a += b; }
  friend ComplexT operator-(ComplexT a, const ComplexT& b) { return a -= b; }
  friend ComplexT operator*(const ComplexT& a, const ComplexT& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexT operator/(const ComplexT& a, const ComplexT& b) {
    R d = b.re * b.re + b.im * b.im;
    if (d == 0) throw std::domain_error("ComplexT: division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const ComplexT& a, const ComplexT& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using RatC = ComplexT<Rat>;

// -- scalar helpers shared by the polynomial layer ---------------------------

inline C64 conj_of(const C64& c) { return std::conj(c); }
template <class R>
ComplexT<R> conj_of(const ComplexT<R>& c) {
  return {c.re, -c.im};
}

inline bool scalar_is_zero(const C64& c, double tol) {
  return std::abs(c.real()) <= tol && std::abs(c.imag()) <= tol;
}
template <class R>
bool scalar_is_zero(const ComplexT<R>& c, double /*tol*/) {
  return c.re == 0 && c.im == 0;
}

inline double scalar_abs(const C64& c) { return std::abs(c); }
template <class R>
double scalar_abs(const ComplexT<R>& c) {
  const double re = static_cast<double>(c.re), im = static_cast<double>(c.im);
  return std::sqrt(re * re + im * im);
}

/// Construction of ring elements from small Gaussian integers; lets the
/// Pauli matrices and friends be written once for every coefficient ring.
template <class T>
struct RingIO {
  static T from_ci(int re, int im) { return T(re, im); }
};
template <>
struct RingIO<C64> {
  static C64 from_ci(int re, int im) { return {double(re), double(im)}; }
};

// -- 2x2 matrices over an arbitrary ring -------------------------------------

template <class T>
struct Mat2 {
  // row-major: e[0]=a00, e[1]=a01, e[2]=a10, e[3]=a11
  std::array<T, 4> e{};

  Mat2() = default;
  Mat2(T a00, T a01, T a10, T a11)
      : e{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

  static Mat2 identity() {
    return {RingIO<T>::from_ci(1, 0), T{}, T{}, RingIO<T>::from_ci(1, 0)};
  }
  static Mat2 zero() { return {}; }

  T& operator()(int i, int j) { return e[2 * i + j]; }
  const T& operator()(int i, int j) const { return e[2 * i + j]; }

  T trace() const { return e[0] + e[3]; }
  T det() const { return e[0] * e[3] - e[1] * e[2]; }
  Mat2 transpose() const { return {e[0], e[2], e[1], e[3]}; }

  Mat2 operator-() const { return {-e[0], -e[1], -e[2], -e[3]}; }
  Mat2& operator+=(const Mat2& o) {
    for (int i = 0; i < 4; ++i) e[i] += o.e[i];
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    for (int i = 0; i < 4; ++i) e[i] -= o.e[i];
    return *this;
  }
  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
            a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
  }
  template <class S>
  friend Mat2 operator*(const Mat2& a, const S& s) {
    return {a.e[0] * s, a.e[1] * s, a.e[2] * s, a.e[3] * s};
  }
  template <class S>
  friend Mat2 operator*(const S& s, const Mat2& a) {
    return a * s;
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
};

template <class T>
Mat2<T> commutator(const Mat2<T>& a, const Mat2<T>& b) {
  return a * b - b * a;
}

/// Pauli matrices tau_1, tau_2, tau_3 (k = 1, 2, 3).
template <class T>
Mat2<T> pauli_tau(int k) {
  auto ci = [](int re, int im) { return RingIO<T>::from_ci(re, im); };
  switch (k) {
    case 1: return {ci(0, 0), ci(1, 0), ci(1, 0), ci(0, 0)};
    case 2: return {ci(0, 0), ci(0, -1), ci(0, 1), ci(0, 0)};
    case 3: return {ci(1, 0), ci(0, 0), ci(0, 0), ci(-1, 0)};
    default: throw std::invalid_argument("pauli_tau: index must be 1, 2 or 3");
  }
}

using Mat2C = Mat2<C64>;

inline Mat2C dagger(const Mat2C& m) {
  return {std::conj(m.e[0]), std::conj(m.e[2]), std::conj(m.e[1]),
          std::conj(m.e[3])};
}

inline Mat2C inverse2(const Mat2C& m) {
  const C64 d = m.det();
  if (std::abs(d) == 0.0) throw std::domain_error("inverse2: singular matrix");
  return {m.e[3] / d, -m.e[1] / d, -m.e[2] / d, m.e[0] / d};
}

/// Sup norm over entries.
inline double mnorm(const Mat2C& m) {
  double r = 0;
  for (const auto& c : m.e) r = std::max(r, std::abs(c));
  return r;
}

inline bool finite_entries(const Mat2C& m) {
  for (const auto& c : m.e)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

// sinh(s)/s, continued through s = 0 by its even power series.
inline C64 sinhc(const C64& s) {
  if (std::abs(s) < 1e-4) {
    const C64 s2 = s * s;
    return 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
  }
  return std::sinh(s) / s;
}

/// Closed-form exponential of a 2x2 complex matrix: with M = (tr M / 2) Id + M0
/// and s^2 = -det M0, exp(M) = e^{tr M / 2} (cosh(s) Id + sinhc(s) M0).
Mat2C mat_exp2(const Mat2C& m);

/// Unique Hermitian positive-definite square root of a Hermitian
/// positive-definite matrix, S = (H + sqrt(det H) Id) / sqrt(tr H + 2 sqrt(det H)).
/// Throws std::domain_error on non-Hermitian or non-positive input.
Mat2C hermitian_sqrt(const Mat2C& h);

// -- spectral sphere ----------------------------------------------------------

/// Point of CP^1: a finite complex number or the point at infinity.
struct SpectralPoint {
  C64 z{};
  bool infinite = false;

  static SpectralPoint finite(C64 val) { return {val, false}; }
  static SpectralPoint infinity() { return {C64{}, true}; }
};

/// The antiholomorphic involution sigma(z) = -1/conj(z); swaps 0 and infinity
/// exactly.
SpectralPoint sigma(const SpectralPoint& p);

using LoopFn = std::function<Mat2C(const SpectralPoint&)>;

/// Reality involution on loops: g*(z) = (g(sigma(z)))^dagger.
Mat2C star_loop(const LoopFn& g, const SpectralPoint& z);

}  // namespace sdym
