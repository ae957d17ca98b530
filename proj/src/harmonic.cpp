#include "sdym/harmonic.hpp"

#include <map>
#include <mutex>

namespace sdym {

namespace {

std::vector<Mono> monomials_up_to(int deg) {
  std::vector<Mono> out;
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b)
      for (int c = 0; a + b + c <= deg; ++c)
        for (int d = 0; a + b + c + d <= deg; ++d) out.push_back({a, b, c, d});
  return out;
}

// Kernel of the linear map q -> laplacian(q)/4 on the monomial basis.
std::vector<PolyQ> compute_basis(int max_degree) {
  const std::vector<Mono> cols = monomials_up_to(max_degree);
  const std::vector<Mono> rows =
      max_degree >= 2 ? monomials_up_to(max_degree - 2) : std::vector<Mono>{};
  std::map<Mono, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;

  // mat[r][c] = coefficient of row-monomial r in (d_u d_ubar + d_v d_vbar)
  // applied to column-monomial c.
  std::vector<std::vector<Rat>> mat(rows.size(),
                                    std::vector<Rat>(cols.size(), Rat(0)));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Mono& m = cols[c];
    if (m[0] > 0 && m[1] > 0) {
      Mono t{m[0] - 1, m[1] - 1, m[2], m[3]};
      mat[row_index.at(t)][c] += Rat(m[0]) * Rat(m[1]);
    }
    if (m[2] > 0 && m[3] > 0) {
      Mono t{m[0], m[1], m[2] - 1, m[3] - 1};
      mat[row_index.at(t)][c] += Rat(m[2]) * Rat(m[3]);
    }
  }

  // reduced row echelon form
  std::vector<int> pivot_of_row;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < mat.size() && lead < cols.size(); ++r) {
    std::size_t piv = r;
    while (piv < mat.size() && mat[piv][lead] == 0) {
      ++piv;
      if (piv == mat.size()) {
        piv = r;
        ++lead;
        if (lead == cols.size()) break;
      }
    }
    if (lead == cols.size()) break;
    std::swap(mat[r], mat[piv]);
    const Rat d = mat[r][lead];
    for (auto& x : mat[r]) x /= d;
    for (std::size_t r2 = 0; r2 < mat.size(); ++r2) {
      if (r2 == r || mat[r2][lead] == 0) continue;
      const Rat f = mat[r2][lead];
      for (std::size_t c = 0; c < cols.size(); ++c)
        mat[r2][c] -= f * mat[r][c];
    }
    pivot_of_row.push_back(int(lead));
    ++lead;
  }

  std::vector<bool> is_pivot(cols.size(), false);
  for (int p : pivot_of_row) is_pivot[p] = true;

  std::vector<PolyQ> basis;
  for (std::size_t f = 0; f < cols.size(); ++f) {
    if (is_pivot[f]) continue;
    PolyQ vec = PolyQ::monomial(cols[f], RatC(1));
    for (std::size_t r = 0; r < pivot_of_row.size(); ++r) {
      const Rat& coef = mat[r][f];
      if (coef != 0)
        vec.add_term(cols[pivot_of_row[r]], RatC(-coef));
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace

const std::vector<PolyQ>& harmonic_basis_rational(int max_degree) {
  static std::mutex mu;
  static std::map<int, std::vector<PolyQ>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_degree);
  if (it == cache.end())
    it = cache.emplace(max_degree, compute_basis(max_degree)).first;
  return it->second;
}

PolyQ random_real_harmonic(Rng& rng, int max_degree) {
  const auto& basis = harmonic_basis_rational(max_degree);
  for (int attempt = 0; attempt < 64; ++attempt) {
    PolyQ p;
    const int picks = rng.uniform_int(3, 8);
    for (int k = 0; k < picks; ++k) {
      const auto& b = basis[std::size_t(rng.uniform_int(0, int(basis.size()) - 1))];
      const Rat re(rng.uniform_int(-8, 8), 8);
      const Rat im(rng.uniform_int(-8, 8), 8);
      p += b * RatC(re, im);
    }
    PolyQ a = p + p.conjugate_field();
    if (!a.is_zero()) return a;
  }
  throw std::runtime_error("random_real_harmonic: sampler failed to produce a nonzero field");
}

}  // namespace sdym
