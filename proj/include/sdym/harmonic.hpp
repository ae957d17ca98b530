#pragma once

#include <vector>

#include "sdym/polyfield.hpp"

namespace sdym {

/// Exact basis of the kernel of the flat Laplacian on complex polynomials of
/// total degree <= max_degree, computed by rational Gaussian elimination.
/// Deterministic ordering; results are cached per degree.
const std::vector<PolyQ>& harmonic_basis_rational(int max_degree);

/// Random real harmonic polynomial of degree <= max_degree with dyadic
/// rational coefficients: a random harmonic-basis combination symmetrized by
/// p + conj(p). Never returns the zero polynomial.
PolyQ random_real_harmonic(Rng& rng, int max_degree);

}  // namespace sdym
