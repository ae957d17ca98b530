#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "sdym/algebra.hpp"
#include "sdym/util.hpp"

namespace sdym {

/// The four commuting variables. u and ubar are formally independent symbols;
/// reality of a field means conjugate_field(p) == p as polynomials.
enum class Var : int { u = 0, ubar = 1, v = 2, vbar = 3 };

using Mono = std::array<int, 4>;  // exponents (e_u, e_ubar, e_v, e_vbar)

inline Var conj_var(Var w) {
  switch (w) {
    case Var::u: return Var::ubar;
    case Var::ubar: return Var::u;
    case Var::v: return Var::vbar;
    default: return Var::v;
  }
}

/// Exact polynomial in (u, ubar, v, vbar) with coefficients in K. Zero
/// coefficients are never stored.
template <class K>
class Poly {
 public:
  using Terms = std::map<Mono, K>;

  Poly() = default;
  explicit Poly(K c) {
    if (!scalar_is_zero(c, 0.0)) terms_[{0, 0, 0, 0}] = std::move(c);
  }

  static Poly variable(Var w) {
    Mono m{0, 0, 0, 0};
    m[int(w)] = 1;
    return monomial(m, RingIO<K>::from_ci(1, 0));
  }
  static Poly monomial(Mono m, K c) {
    Poly p;
    if (!scalar_is_zero(c, 0.0)) p.terms_[m] = std::move(c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  K coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K{} : it->second;
  }

  void add_term(const Mono& m, const K& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (scalar_is_zero(it->second, 0.0)) terms_.erase(it);
    } else if (scalar_is_zero(it->second, 0.0)) {
      terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend Poly operator*(Poly a, const K& s) {
    if (scalar_is_zero(s, 0.0)) return Poly{};
    for (auto& [m, c] : a.terms_) c = c * s;
    a.prune();
    return a;
  }
  friend Poly operator*(const K& s, const Poly& a) { return a * s; }

  /// Exact formal partial derivative.
  Poly derive(Var w) const {
    const int i = int(w);
    Poly r;
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Mono d = m;
      d[i] -= 1;
      r.add_term(d, c * RingIO<K>::from_ci(m[i], 0));
    }
    return r;
  }

  /// Term-wise antiderivative in w (constant of integration zero).
  Poly antiderive(Var w) const {
    const int i = int(w);
    Poly r;
    for (const auto& [m, c] : terms_) {
      Mono d = m;
      d[i] += 1;
      r.add_term(d, c / RingIO<K>::from_ci(d[i], 0));
    }
    return r;
  }

  /// Swap u <-> ubar, v <-> vbar and conjugate coefficients; realizes
  /// pointwise complex conjugation of the field.
  Poly conjugate_field() const {
    Poly r;
    for (const auto& [m, c] : terms_)
      r.add_term({m[1], m[0], m[3], m[2]}, conj_of(c));
    return r;
  }

  /// Flat Laplacian 4 (d_u d_ubar + d_v d_vbar).
  Poly laplacian() const {
    Poly r = derive(Var::u).derive(Var::ubar) + derive(Var::v).derive(Var::vbar);
    return r * RingIO<K>::from_ci(4, 0);
  }

  bool is_harmonic(double tol = 0.0) const { return laplacian().is_zero(tol); }
  bool is_real_field(double tol = 0.0) const {
    return (*this - conjugate_field()).is_zero(tol);
  }

  /// Substitute ring values for the four variables and sum.
  template <class S>
  S evaluate_at(const S& uval, const S& ubarval, const S& vval,
                const S& vbarval) const {
    auto power = [](S base, int n) {
      S acc(1);
      while (n-- > 0) acc = acc * base;
      return acc;
    };
    std::vector<S> parts;
    parts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      S val = power(uval, m[0]) * power(ubarval, m[1]) * power(vval, m[2]) *
              power(vbarval, m[3]);
      parts.push_back(S(c) * val);
    }
    if (parts.empty()) return S(0);
    return pairwise_sum(std::move(parts));
  }

  bool is_zero(double tol = 0.0) const {
    for (const auto& [m, c] : terms_)
      if (!scalar_is_zero(c, tol)) return false;
    return true;
  }

  /// Largest coefficient magnitude (residual reporting).
  double sup_coeff() const {
    double r = 0;
    for (const auto& [m, c] : terms_) r = std::max(r, scalar_abs(c));
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2] + m[3]);
    return d;
  }

  /// Monomials depending on (u, v) only.
  Poly pure_holomorphic_part() const {
    Poly r;
    for (const auto& [m, c] : terms_)
      if (m[1] == 0 && m[3] == 0) r.add_term(m, c);
    return r;
  }
  /// Monomials depending on (ubar, vbar) only.
  Poly pure_antiholomorphic_part() const {
    Poly r;
    for (const auto& [m, c] : terms_)
      if (m[0] == 0 && m[2] == 0) r.add_term(m, c);
    return r;
  }

  bool depends_on(Var w) const {
    for (const auto& [m, c] : terms_)
      if (m[int(w)] > 0) return true;
    return false;
  }

  void prune(double tol = 0.0) {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = scalar_is_zero(it->second, tol) ? terms_.erase(it) : std::next(it);
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

template <class K>
struct RingIO<Poly<K>> {
  static Poly<K> from_ci(int re, int im) {
    return Poly<K>(RingIO<K>::from_ci(re, im));
  }
};

using PolyC = Poly<C64>;
using PolyQ = Poly<RatC>;

/// Evaluate at a point of R^4 through the coordinate dictionary
/// u = t + ix, ubar = t - ix, v = y - iz, vbar = y + iz.
inline C64 evaluate(const PolyC& p, const R4Point& pt) {
  return p.evaluate_at(pt.u(), pt.ubar(), pt.v(), pt.vbar());
}

inline PolyC to_double(const PolyQ& p) {
  PolyC r;
  for (const auto& [m, c] : p.terms())
    r.add_term(m, C64{static_cast<double>(c.re), static_cast<double>(c.im)});
  return r;
}

// -- matrix-valued polynomial fields ------------------------------------------

template <class K>
using MatrixPoly = Mat2<Poly<K>>;

using MatrixPolyC = MatrixPoly<C64>;
using MatrixPolyQ = MatrixPoly<RatC>;

template <class K>
MatrixPoly<K> derive(const MatrixPoly<K>& m, Var w) {
  MatrixPoly<K> r;
  for (int i = 0; i < 4; ++i) r.e[i] = m.e[i].derive(w);
  return r;
}

/// Pointwise conjugate transpose of the field.
template <class K>
MatrixPoly<K> field_dagger(const MatrixPoly<K>& m) {
  return {m.e[0].conjugate_field(), m.e[2].conjugate_field(),
          m.e[1].conjugate_field(), m.e[3].conjugate_field()};
}

template <class K>
bool is_zero(const MatrixPoly<K>& m, double tol = 0.0) {
  for (int i = 0; i < 4; ++i)
    if (!m.e[i].is_zero(tol)) return false;
  return true;
}

template <class K>
double sup_coeff(const MatrixPoly<K>& m) {
  double r = 0;
  for (int i = 0; i < 4; ++i) r = std::max(r, m.e[i].sup_coeff());
  return r;
}

inline Mat2C evaluate(const MatrixPolyC& m, const R4Point& pt) {
  return {evaluate(m.e[0], pt), evaluate(m.e[1], pt), evaluate(m.e[2], pt),
          evaluate(m.e[3], pt)};
}

inline MatrixPolyC to_matrix_poly(const Mat2C& m) {
  return {PolyC(m.e[0]), PolyC(m.e[1]), PolyC(m.e[2]), PolyC(m.e[3])};
}

// Convenience symbols.
template <class K>
Poly<K> var_u() { return Poly<K>::variable(Var::u); }
template <class K>
Poly<K> var_ubar() { return Poly<K>::variable(Var::ubar); }
template <class K>
Poly<K> var_v() { return Poly<K>::variable(Var::v); }
template <class K>
Poly<K> var_vbar() { return Poly<K>::variable(Var::vbar); }

/// |u|^2 - |v|^2, the harmonic seed of the algebraically special connection.
template <class K>
Poly<K> norm_split_harmonic() {
  return var_u<K>() * var_ubar<K>() - var_v<K>() * var_vbar<K>();
}

}  // namespace sdym
