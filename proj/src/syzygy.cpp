#include "qcorona/syzygy.hpp"

#include <stdexcept>

namespace qcorona {

std::vector<CPoly> slice_vector(const std::vector<SplitPair>& splits) {
  std::vector<CPoly> out;
  out.reserve(2 * splits.size());
  for (const auto& s : splits) {
    out.push_back(s.F);
    out.push_back(s.G);
  }
  return out;
}

std::vector<CPoly> hat_swap(const std::vector<CPoly>& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("hat_swap: odd length");
  std::vector<CPoly> out(v.size());
  for (std::size_t l = 0; l < v.size(); l += 2) {
    out[l] = -hat(v[l + 1]);
    out[l + 1] = hat(v[l]);
  }
  return out;
}

SyzygyPair build_koszul(const std::vector<HPoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("build_koszul: no polynomials");
  SyzygyPair out;
  out.n = fs.size();
  for (const auto& f : fs) out.splits.push_back(split(f));
  const auto P = slice_vector(out.splits);
  const std::size_t dim = P.size();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = r + 1; s < dim; ++s) out.pairs.emplace_back(r, s);
  }
  out.A = PolyMatrix(dim, out.pairs.size());
  out.B = PolyMatrix(dim, out.pairs.size());
  for (std::size_t k = 0; k < out.pairs.size(); ++k) {
    const auto [r, s] = out.pairs[k];
    out.A(r, k) = P[s];
    out.A(s, k) = -P[r];
    const auto b = hat_swap(out.A.column(k));
    for (std::size_t row = 0; row < dim; ++row) out.B(row, k) = b[row];
  }
  return out;
}

NaturalSyzygy natural_syzygy(const std::vector<HPoly>& fs, std::size_t r, std::size_t t) {
  if (!(r < t && t < fs.size())) throw std::invalid_argument("natural_syzygy: need r < t < n");
  NaturalSyzygy out{r, t, std::vector<HPoly>(fs.size())};
  out.entries[t] = regular_conjugate(fs[t]) * symmetrization(fs[r]);
  out.entries[r] = -(regular_conjugate(fs[r]) * symmetrization(fs[t]));
  return out;
}

HPoly left_combination(const std::vector<HPoly>& fs, const std::vector<HPoly>& entries) {
  if (fs.size() != entries.size()) throw std::invalid_argument("left_combination: size mismatch");
  HPoly sum;
  for (std::size_t l = 0; l < fs.size(); ++l) sum += fs[l] * entries[l];
  return sum;
}

ThreeTermCheck check_three_term(const std::vector<HPoly>& fs, std::size_t p, std::size_t r,
                                std::size_t t) {
  if (!(p < r && r < t && t < fs.size())) {
    throw std::invalid_argument("check_three_term: need p < r < t < n");
  }
  const auto rt = natural_syzygy(fs, r, t).entries;
  const auto pt = natural_syzygy(fs, p, t).entries;
  const auto pr = natural_syzygy(fs, p, r).entries;
  const HPoly sp = symmetrization(fs[p]);
  const HPoly sr = symmetrization(fs[r]);
  const HPoly st = symmetrization(fs[t]);
  for (std::size_t slot = 0; slot < fs.size(); ++slot) {
    HPoly lhs = rt[slot] * sp;
    HPoly rhs = pt[slot] * sr - pr[slot] * st;
    if (!(lhs == rhs)) return ThreeTermFailure{slot, std::move(lhs), std::move(rhs)};
  }
  return HoldsExactly{};
}

std::optional<SyzygyReduction> reduce_syzygy(const std::vector<HPoly>& fs, std::size_t p,
                                             std::size_t r, std::size_t t) {
  if (!(p < r && r < t && t < fs.size())) {
    throw std::invalid_argument("reduce_syzygy: need p < r < t < n");
  }
  const HPoly sp = symmetrization(fs[p]);
  if (sp.is_zero()) return std::nullopt;
  const auto pt = natural_syzygy(fs, p, t).entries;
  const auto pr = natural_syzygy(fs, p, r).entries;
  const HPoly sr = symmetrization(fs[r]);
  const HPoly st = symmetrization(fs[t]);
  SyzygyReduction out;
  for (std::size_t slot = 0; slot < fs.size(); ++slot) {
    auto a = divide_by_real(pt[slot] * sr, sp);
    auto b = divide_by_real(pr[slot] * st, sp);
    if (!a || !b) return std::nullopt;
    out.via_pt.push_back(std::move(*a));
    out.via_pr.push_back(std::move(*b));
  }
  return out;
}

KernelDimensions kernel_dimension_at(const SyzygyPair& pair, const GaussRat& z) {
  const std::size_t cols = pair.A.cols();
  const std::size_t rank_ab = rank_at(pair.combined(), z);
  const std::size_t rank_a = rank_at(pair.A, z);
  const std::size_t rank_b = rank_at(pair.B, z);
  return {2 * cols - rank_ab, (cols - rank_a) + (cols - rank_b)};
}

}  // namespace qcorona
