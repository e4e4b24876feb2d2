#include "oracles.hpp"

namespace qtest {

HPoly convolve(const HPoly& f, const HPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Quat> out(f.size() + g.size() - 1);
  for (std::size_t m = 0; m < f.size(); ++m) {
    for (std::size_t l = 0; l < g.size(); ++l) out[m + l] = out[m + l] + f.coeff(m) * g.coeff(l);
  }
  return HPoly(std::move(out));
}

CPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return CPoly(GaussRat(1));
  if (n == 1) return m(0, 0);
  CPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<CPoly>> rows;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m(r, k));
      }
      rows.push_back(std::move(row));
    }
    const CPoly term = m(0, c) * cofactor_det(PolyMatrix::from_rows(rows));
    if (c % 2 == 0) det += term; else det -= term;
  }
  return det;
}

SplitPair star_of_components(const SplitPair& f, const SplitPair& g) {
  return {f.F * g.F - f.G * hat(g.G), f.F * g.G + f.G * hat(g.F)};
}

Quat extension_value(const SplitPair& f, const Rat& x, const Rat& y, const Quat& J) {
  const Quat a = slice_value(f, GaussRat(x, y));
  const Quat b = slice_value(f, GaussRat(x, -y));
  const Rat half(1, 2);
  return (a + b) * half + J * Quat::i() * (b - a) * half;
}

Quat pointwise_product_rule(const HPoly& f, const HPoly& g, const Quat& q) {
  const Quat fq = eval_hpoly(f, q);
  if (fq.is_zero()) return Quat(0);
  return fq * eval_hpoly(g, fq.inverse() * q * fq);
}

SplitPair components(const HPoly& f) {
  std::vector<GaussRat> F, G;
  for (std::size_t m = 0; m < f.size(); ++m) {
    const Quat& a = f.coeff(m);
    F.emplace_back(a.x0, a.x1);
    G.emplace_back(a.x2, a.x3);
  }
  return {CPoly(std::move(F)), CPoly(std::move(G))};
}

}  // namespace qtest
