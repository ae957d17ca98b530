#include "sdym/twistor.hpp"

#include <cmath>
#include <stdexcept>

namespace sdym {

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

C64 node(double radius, int j, int n) {
  const double th = 2.0 * kPi * j / n;
  return {radius * std::cos(th), radius * std::sin(th)};
}

}  // namespace

void TwistorRep::add_term(int d1, int d2, int k, C64 c) {
  if (d1 < 0 || d2 < 0)
    throw std::invalid_argument("TwistorRep: p1/p2 degrees must be nonnegative");
  auto [it, inserted] = terms_.try_emplace({d1, d2, k}, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) == 0.0) terms_.erase(it);
}

Laurent<PolyC> TwistorRep::expand_w() const {
  Laurent<PolyC> out;
  for (const auto& [key, c] : terms_) {
    const auto [d1, d2, k] = key;
    // p1^d1 = sum_s C(d1,s) u^{d1-s} (-vbar)^s w^s
    // p2^d2 = sum_r C(d2,r) v^{d2-r} ubar^r  w^r
    for (int s = 0; s <= d1; ++s)
      for (int r = 0; r <= d2; ++r) {
        const double sign = (s % 2 == 0) ? 1.0 : -1.0;
        const C64 coef = c * sign * double(binom(d1, s)) * double(binom(d2, r));
        Mono m{d1 - s, r, d2 - r, s};
        out.add(k + s + r, PolyC::monomial(m, coef));
      }
  }
  out.prune_if([](const PolyC& p) { return p.is_zero(); });
  return out;
}

C64 TwistorRep::eval(const R4Point& pt, const C64& w) const {
  const C64 p1 = pt.u() - w * pt.vbar();
  const C64 p2 = pt.v() + w * pt.ubar();
  auto ipow = [](C64 b, int n) {
    if (n < 0) {
      b = 1.0 / b;
      n = -n;
    }
    C64 acc{1, 0};
    while (n-- > 0) acc *= b;
    return acc;
  };
  std::vector<C64> parts;
  parts.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    const auto [d1, d2, k] = key;
    parts.push_back(c * ipow(p1, d1) * ipow(p2, d2) * ipow(w, k));
  }
  if (parts.empty()) return {};
  return pairwise_sum(std::move(parts));
}

TwistorRep TwistorRep::algebraically_special() {
  TwistorRep f;
  f.add_term(1, 1, -2, C64{1, 0});
  return f;
}

namespace {

// w-degree range of the expanded representative
std::pair<int, int> w_degree_range(const TwistorRep& f) {
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    const auto [d1, d2, k] = key;
    const int a = k, b = k + d1 + d2;
    if (first) {
      lo = a;
      hi = b;
      first = false;
    } else {
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
  }
  return {lo, hi};
}

void check_nodes(const TwistorRep& f, const ContourSpec& c) {
  auto [lo, hi] = w_degree_range(f);
  const int bw = std::max(std::abs(lo), std::abs(hi));
  if (c.nodes < 2 * bw + 2)
    throw std::invalid_argument(
        "ContourSpec: node count too small for the integrand's w-bandwidth");
}

}  // namespace

PolyC penrose_exact(const TwistorRep& f) { return f.expand_w().coeff(-1); }

C64 penrose_quadrature(const TwistorRep& f, const R4Point& pt,
                       const ContourSpec& c) {
  check_nodes(f, c);
  std::vector<C64> parts(std::size_t(c.nodes));
  for (int j = 0; j < c.nodes; ++j) {
    const C64 w = node(c.radius, j, c.nodes);
    parts[std::size_t(j)] = f.eval(pt, w) * w;
  }
  return pairwise_sum(std::move(parts)) / double(c.nodes);
}

Laurent<PolyC> cauchy_exact(const TwistorRep& f) {
  // With f = sum_m c_m(x) w^m on the contour interior, the residues at w = 0
  // and w = z combine to F(x, z) = c_{-1} + 2 sum_{m>=0} c_m z^{m+1}.
  const Laurent<PolyC> cw = f.expand_w();
  Laurent<PolyC> F;
  const PolyC a = cw.coeff(-1);
  if (!a.is_zero()) F.set(0, a);
  for (const auto& [m, cm] : cw.coeffs()) {
    if (m < 0) continue;
    F.add(m + 1, cm * C64{2, 0});
  }
  F.prune_if([](const PolyC& p) { return p.is_zero(); });
  return F;
}

C64 cauchy_quadrature(const TwistorRep& f, const R4Point& pt, const C64& z,
                      const ContourSpec& c) {
  if (std::abs(std::abs(z) - c.radius) <= 1e-12 * std::max(1.0, c.radius))
    throw std::domain_error("cauchy_quadrature: z lies on the contour");
  check_nodes(f, c);
  std::vector<C64> parts(std::size_t(c.nodes));
  for (int j = 0; j < c.nodes; ++j) {
    const C64 w = node(c.radius, j, c.nodes);
    parts[std::size_t(j)] = (w + z) / (w - z) * f.eval(pt, w) * w;
  }
  return pairwise_sum(std::move(parts)) / double(c.nodes);
}

C64 PatchingMatrix::phi_at(const R4Point& pt, const C64& z) const {
  return eval_at_point(phi, pt).eval(z);
}

Mat2C PatchingMatrix::value(const R4Point& pt, const C64& z) const {
  const C64 s = phi_at(pt, z);
  return {std::exp(s), C64{}, C64{}, std::exp(-s)};
}

std::vector<Mat2C> PatchingMatrix::unit_circle_samples(const R4Point& pt,
                                                       int n) const {
  std::vector<Mat2C> out(std::size_t(n));
  const Laurent<C64> band = eval_at_point(phi, pt);
  for (int j = 0; j < n; ++j) {
    const C64 s = band.eval(node(1.0, j, n));
    out[std::size_t(j)] = {std::exp(s), C64{}, C64{}, std::exp(-s)};
  }
  return out;
}

std::pair<Laurent<PolyC>, Laurent<PolyC>> twistor_annihilation_residual(
    const Laurent<PolyC>& phi) {
  Laurent<PolyC> r1, r2;
  if (phi.empty()) return {r1, r2};
  for (int n = phi.nmin(); n <= phi.nmax() + 1; ++n) {
    PolyC a = phi.coeff(n).derive(Var::ubar) - phi.coeff(n - 1).derive(Var::v);
    PolyC b = phi.coeff(n).derive(Var::vbar) + phi.coeff(n - 1).derive(Var::u);
    if (!a.is_zero()) r1.set(n, std::move(a));
    if (!b.is_zero()) r2.set(n, std::move(b));
  }
  return {std::move(r1), std::move(r2)};
}

PatchingMatrix patching_from_rep(const TwistorRep& f) {
  const Laurent<PolyC> F = cauchy_exact(f);
  const PolyC a = F.coeff(0);
  const double tol = 1e-12 * (1.0 + a.sup_coeff());
  if (!a.is_real_field(tol))
    throw std::domain_error(
        "patching_from_rep: representative induces a non-real harmonic function");

  PatchingMatrix g;
  g.phi = (F + laurent_star(F)) * C64{0.5, 0};
  g.phi.prune_if([](const PolyC& p) { return p.is_zero(); });

  const double ptol = 1e-12 * (1.0 + laurent_sup_coeff(g.phi));
  auto [t1, t2] = twistor_annihilation_residual(g.phi);
  if (!laurent_is_zero(t1, ptol) || !laurent_is_zero(t2, ptol))
    throw std::domain_error(
        "patching_from_rep: exponent violates the twistor relations");
  if (!laurent_is_zero(g.phi - laurent_star(g.phi), ptol))
    throw std::domain_error("patching_from_rep: exponent violates phi* = phi");
  return g;
}

std::pair<Laurent<PolyC>, Laurent<PolyC>> alp_exponent_residual(
    const Laurent<PolyC>& psi, const PolyC& a) {
  const C64 half{0.5, 0};
  Laurent<PolyC> r1 = laurent_derive(psi, Var::vbar) +
                      laurent_derive(psi, Var::u).shifted(1);
  r1 += Laurent<PolyC>(a.derive(Var::vbar) * C64{-0.5, 0});
  r1 += Laurent<PolyC>(a.derive(Var::u) * half).shifted(1);

  Laurent<PolyC> r2 = laurent_derive(psi, Var::ubar) -
                      laurent_derive(psi, Var::v).shifted(1);
  r2 += Laurent<PolyC>(a.derive(Var::ubar) * C64{-0.5, 0});
  r2 += Laurent<PolyC>(a.derive(Var::v) * C64{-0.5, 0}).shifted(1);

  r1.prune_if([](const PolyC& p) { return p.is_zero(); });
  r2.prune_if([](const PolyC& p) { return p.is_zero(); });
  return {std::move(r1), std::move(r2)};
}

}  // namespace sdym
