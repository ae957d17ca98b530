#include "sdym/connection.hpp"

#include <cmath>
#include <memory>
#include <sstream>

namespace sdym {

namespace {

R4Point shifted(const R4Point& p, int axis, double d) {
  R4Point q = p;
  switch (axis) {
    case 0: q.t += d; break;
    case 1: q.x += d; break;
    case 2: q.y += d; break;
    default: q.z += d; break;
  }
  return q;
}

Mat2C fd_axis(const MatrixField& f, const R4Point& pt, int axis, double h) {
  return (f(shifted(pt, axis, h)) - f(shifted(pt, axis, -h))) * (0.5 / h);
}

Mat2C inverse_checked(const Mat2C& m, const R4Point& pt) {
  const double scale = std::max(1.0, mnorm(m) * mnorm(m));
  if (std::abs(m.det()) <= 1e-12 * scale) {
    std::ostringstream os;
    os << "singular J at stencil point (" << pt.t << ", " << pt.x << ", "
       << pt.y << ", " << pt.z << ")";
    throw std::domain_error(os.str());
  }
  return inverse2(m);
}

}  // namespace

// d_u = (d_t - i d_x)/2, d_ubar = (d_t + i d_x)/2,
// d_v = (d_y + i d_z)/2, d_vbar = (d_y - i d_z)/2.
Mat2C fd_du(const MatrixField& f, const R4Point& pt, double h) {
  return (fd_axis(f, pt, 0, h) - fd_axis(f, pt, 1, h) * C64{0, 1}) * 0.5;
}
Mat2C fd_dubar(const MatrixField& f, const R4Point& pt, double h) {
  return (fd_axis(f, pt, 0, h) + fd_axis(f, pt, 1, h) * C64{0, 1}) * 0.5;
}
Mat2C fd_dv(const MatrixField& f, const R4Point& pt, double h) {
  return (fd_axis(f, pt, 2, h) + fd_axis(f, pt, 3, h) * C64{0, 1}) * 0.5;
}
Mat2C fd_dvbar(const MatrixField& f, const R4Point& pt, double h) {
  return (fd_axis(f, pt, 2, h) - fd_axis(f, pt, 3, h) * C64{0, 1}) * 0.5;
}

MatrixField memoized(MatrixField f) {
  auto cache = std::make_shared<std::map<std::array<double, 4>, Mat2C>>();
  return [cache, f = std::move(f)](const R4Point& pt) {
    const std::array<double, 4> key{pt.t, pt.x, pt.y, pt.z};
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    Mat2C val = f(pt);
    (*cache)[key] = val;
    return val;
  };
}

YangJ YangJ::abelian(PolyC exponent) {
  YangJ j;
  j.exponent_ = exponent;
  j.sample_ = [e = std::move(exponent)](const R4Point& pt) {
    const C64 s = evaluate(e, pt);
    return Mat2C{std::exp(s), C64{}, C64{}, std::exp(-s)};
  };
  return j;
}

YangJ YangJ::sampled(MatrixField f) {
  YangJ j;
  j.sample_ = std::move(f);
  return j;
}

YangJ yang_j_from_a(const PolyC& a) {
  const double tol = 1e-12 * (1.0 + a.sup_coeff());
  if (!a.is_real_field(tol))
    throw std::invalid_argument("yang_j_from_a: exponent is not real");
  if (!a.is_harmonic(tol))
    throw std::invalid_argument("yang_j_from_a: exponent is not harmonic");
  return YangJ::abelian(a);
}

ResidualReport ja_check(const YangJ& J, const MatrixPolyC& Ahol,
                        const std::vector<R4Point>& pts) {
  if (Ahol.e[0].depends_on(Var::ubar) || Ahol.e[0].depends_on(Var::vbar) ||
      Ahol.e[1].depends_on(Var::ubar) || Ahol.e[1].depends_on(Var::vbar) ||
      Ahol.e[2].depends_on(Var::ubar) || Ahol.e[2].depends_on(Var::vbar) ||
      Ahol.e[3].depends_on(Var::ubar) || Ahol.e[3].depends_on(Var::vbar))
    throw std::invalid_argument("ja_check: A must be holomorphic in (u, v)");
  ResidualReport rep;
  for (const auto& pt : pts) {
    const Mat2C j = J(pt);
    const Mat2C a = evaluate(Ahol, pt);
    const double r = mnorm(j * a + dagger(a) * j);
    if (r > rep.max) {
      rep.max = r;
      rep.argmax = pt;
    }
  }
  return rep;
}

ResidualReport yang_pohlmeyer_residual(const MatrixField& J,
                                       const std::vector<R4Point>& pts,
                                       double h) {
  auto P = [&](const R4Point& q) {
    return fd_dubar(J, q, h) * inverse_checked(J(q), q);
  };
  auto Q = [&](const R4Point& q) {
    return fd_dvbar(J, q, h) * inverse_checked(J(q), q);
  };
  ResidualReport rep;
  for (const auto& pt : pts) {
    const double r = mnorm(fd_du(P, pt, h) + fd_dv(Q, pt, h));
    if (r > rep.max) {
      rep.max = r;
      rep.argmax = pt;
    }
  }
  return rep;
}

MatrixPolyC yang_pohlmeyer_exact(const PolyC& a) {
  const PolyC s = a.derive(Var::u).derive(Var::ubar) +
                  a.derive(Var::v).derive(Var::vbar);
  return pauli_tau<PolyC>(3) * s;
}

YangJ gauge_transform_J(const YangJ& J, const MatrixPolyC& R) {
  for (int i = 0; i < 4; ++i)
    if (R.e[i].depends_on(Var::ubar) || R.e[i].depends_on(Var::vbar))
      throw std::invalid_argument("gauge_transform_J: R must be holomorphic");
  const PolyC det = R.det() - PolyC(C64{1, 0});
  if (!det.is_zero(1e-12 * (1.0 + sup_coeff(R))))
    throw std::invalid_argument("gauge_transform_J: det R must be 1");
  return YangJ::sampled([J, R](const R4Point& pt) {
    const Mat2C r = evaluate(R, pt);
    return dagger(r) * J(pt) * r;
  });
}

YangJ gauge_transform_abelian(const YangJ& J, const PolyC& rho) {
  if (!J.exact())
    throw std::invalid_argument(
        "gauge_transform_abelian: J carries no abelian exponent");
  if (rho.depends_on(Var::ubar) || rho.depends_on(Var::vbar))
    throw std::invalid_argument("gauge_transform_abelian: rho must be holomorphic");
  return YangJ::abelian(*J.abelian_exponent() + rho + rho.conjugate_field());
}

ResidualReport linearisation_residual(const MatrixField& J,
                                      const MatrixField& Jdot,
                                      const std::vector<R4Point>& pts,
                                      double h) {
  auto T = [&](const R4Point& q) {
    return inverse_checked(J(q), q) * Jdot(q);
  };
  auto P = [&](const R4Point& q) {
    const Mat2C j = J(q);
    return j * fd_dubar(T, q, h) * inverse_checked(j, q);
  };
  auto Q = [&](const R4Point& q) {
    const Mat2C j = J(q);
    return j * fd_dvbar(T, q, h) * inverse_checked(j, q);
  };
  ResidualReport rep;
  for (const auto& pt : pts) {
    const double r = mnorm(fd_du(P, pt, h) + fd_dv(Q, pt, h));
    if (r > rep.max) {
      rep.max = r;
      rep.argmax = pt;
    }
  }
  return rep;
}

MatrixPolyC linearisation_exact(const PolyC& b) {
  return yang_pohlmeyer_exact(b);
}

}  // namespace sdym
