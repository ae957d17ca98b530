#pragma once

#include <map>

#include "sdym/polyfield.hpp"

namespace sdym {

/// Finite Laurent series in the spectral variable z with coefficients in T
/// (numbers, 2x2 matrices, polynomial fields, ...). Zero coefficients are
/// dropped where T exposes an is_zero-style predicate via prune().
template <class T>
class Laurent {
 public:
  using Coeffs = std::map<int, T>;

  Laurent() = default;
  explicit Laurent(T c0) { set(0, std::move(c0)); }

  const Coeffs& coeffs() const { return c_; }
  bool empty() const { return c_.empty(); }
  int nmin() const { return c_.empty() ? 0 : c_.begin()->first; }
  int nmax() const { return c_.empty() ? 0 : c_.rbegin()->first; }
  /// Largest |n| carrying a coefficient.
  int band() const { return std::max(std::abs(nmin()), std::abs(nmax())); }

  T coeff(int n) const {
    auto it = c_.find(n);
    return it == c_.end() ? T{} : it->second;
  }
  void set(int n, T val) { c_[n] = std::move(val); }
  void add(int n, const T& val) {
    auto [it, inserted] = c_.try_emplace(n, val);
    if (!inserted) it->second += val;
  }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [n, v] : c_) r.c_[n] = -v;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (const auto& [n, v] : o.c_) add(n, v);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [n, v] : o.c_) add(n, -v);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [n, x] : a.c_)
      for (const auto& [m, y] : b.c_) r.add(n + m, x * y);
    return r;
  }
  template <class S>
  friend Laurent operator*(Laurent a, const S& s) {
    for (auto& [n, v] : a.c_) v = v * s;
    return a;
  }

  /// Multiplication by z^k.
  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [n, v] : c_) r.c_[n + k] = v;
    return r;
  }

  /// Keep coefficients with n in [lo, hi].
  Laurent restricted(int lo, int hi) const {
    Laurent r;
    for (const auto& [n, v] : c_)
      if (n >= lo && n <= hi) r.c_[n] = v;
    return r;
  }

  /// The reality involution on Laurent data: L*(z) = adj(L(sigma(z)))
  /// realized coefficient-wise as n -> (-1)^n adj(c_{-n}). adj is the
  /// appropriate pointwise adjoint for T (dagger, field conjugation, ...).
  template <class Adj>
  Laurent star(Adj adj) const {
    Laurent r;
    for (const auto& [n, v] : c_) {
      T w = adj(v);
      r.c_[-n] = (n % 2 == 0) ? w : -w;
    }
    return r;
  }

  /// Evaluate at finite nonzero z (or any z when the band allows it).
  T eval(const C64& z) const {
    T acc{};
    for (const auto& [n, v] : c_) acc += v * zpow(z, n);
    return acc;
  }

  static C64 zpow(const C64& z, int n) {
    if (n == 0) return {1.0, 0.0};
    const C64 base = n > 0 ? z : 1.0 / z;
    C64 acc{1.0, 0.0};
    for (int k = std::abs(n); k > 0; --k) acc *= base;
    return acc;
  }

  template <class Pred>
  void prune_if(Pred drop) {
    for (auto it = c_.begin(); it != c_.end();)
      it = drop(it->second) ? c_.erase(it) : std::next(it);
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.c_ == b.c_;
  }

 private:
  Coeffs c_;
};

// -- star maps for the concrete coefficient types ------------------------------

inline Laurent<C64> laurent_star(const Laurent<C64>& l) {
  return l.star([](const C64& c) { return std::conj(c); });
}
inline Laurent<Mat2C> laurent_star(const Laurent<Mat2C>& l) {
  return l.star([](const Mat2C& m) { return dagger(m); });
}
template <class K>
Laurent<Poly<K>> laurent_star(const Laurent<Poly<K>>& l) {
  return l.star([](const Poly<K>& p) { return p.conjugate_field(); });
}
template <class K>
Laurent<MatrixPoly<K>> laurent_star(const Laurent<MatrixPoly<K>>& l) {
  return l.star([](const MatrixPoly<K>& m) { return field_dagger(m); });
}

template <class K>
Laurent<Poly<K>> laurent_derive(const Laurent<Poly<K>>& l, Var w) {
  Laurent<Poly<K>> r;
  for (const auto& [n, p] : l.coeffs()) r.set(n, p.derive(w));
  r.prune_if([](const Poly<K>& p) { return p.is_zero(); });
  return r;
}
template <class K>
Laurent<MatrixPoly<K>> laurent_derive(const Laurent<MatrixPoly<K>>& l, Var w) {
  Laurent<MatrixPoly<K>> r;
  for (const auto& [n, p] : l.coeffs()) r.set(n, derive(p, w));
  r.prune_if([](const MatrixPoly<K>& m) { return is_zero(m); });
  return r;
}

template <class K>
bool laurent_is_zero(const Laurent<Poly<K>>& l, double tol = 0.0) {
  for (const auto& [n, p] : l.coeffs())
    if (!p.is_zero(tol)) return false;
  return true;
}
template <class K>
bool laurent_is_zero(const Laurent<MatrixPoly<K>>& l, double tol = 0.0) {
  for (const auto& [n, p] : l.coeffs())
    if (!is_zero(p, tol)) return false;
  return true;
}

template <class K>
double laurent_sup_coeff(const Laurent<Poly<K>>& l) {
  double r = 0;
  for (const auto& [n, p] : l.coeffs()) r = std::max(r, p.sup_coeff());
  return r;
}

/// Evaluate a polynomial-coefficient Laurent series at a base point, giving a
/// numeric Laurent band.
inline Laurent<C64> eval_at_point(const Laurent<PolyC>& l, const R4Point& pt) {
  Laurent<C64> r;
  for (const auto& [n, p] : l.coeffs()) r.set(n, evaluate(p, pt));
  return r;
}
inline Laurent<Mat2C> eval_at_point(const Laurent<MatrixPolyC>& l,
                                    const R4Point& pt) {
  Laurent<Mat2C> r;
  for (const auto& [n, p] : l.coeffs()) r.set(n, evaluate(p, pt));
  return r;
}

}  // namespace sdym
