#pragma once

// Koszul syzygy matrices of the split system and the natural quaternionic
// syzygies of a vector of quaternionic polynomials.
//
// For f_l = F_l + G_l j put P = (F_1, G_1, ..., F_n, G_n). The columns of A are
// the Koszul generators P_s e_r - P_r e_s for r < s, in pair-lexicographic
// order. Column k of B is hat_swap of column k of A, which makes B a Koszul
// generator matrix of W = (-hat G_1, hat F_1, ..., -hat G_n, hat F_n) and gives
// the linkage hat_swap(A hat(beta)) = B beta. For n = 2 both matrices coincide
// with the printed 4x6 matrices of the two-function construction, column for
// column.

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qcorona/hpoly.hpp"
#include "qcorona/polymatrix.hpp"

namespace qcorona {

struct SyzygyPair {
  PolyMatrix A;
  PolyMatrix B;
  std::size_t n = 0;
  std::vector<SplitPair> splits;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // column k <-> (r, s), 0-based

  /// (A, -B)
  PolyMatrix combined() const { return A.hconcat(-B); }
};

/// (F_1, G_1, ..., F_n, G_n)
std::vector<CPoly> slice_vector(const std::vector<SplitPair>& splits);

/// Throws std::invalid_argument for an empty list.
SyzygyPair build_koszul(const std::vector<HPoly>& fs);

/// out[2l] = -hat(v[2l+1]), out[2l+1] = hat(v[2l]) (0-based).
/// Throws std::invalid_argument for odd length.
std::vector<CPoly> hat_swap(const std::vector<CPoly>& v);

/// syz(r, t) = (f_t^c * f_r^s) e_t - (f_r^c * f_t^s) e_r, indices 0-based, r < t.
struct NaturalSyzygy {
  std::size_t r = 0;
  std::size_t t = 0;
  std::vector<HPoly> entries;
};

NaturalSyzygy natural_syzygy(const std::vector<HPoly>& fs, std::size_t r, std::size_t t);

/// sum_l f_l * entries_l
HPoly left_combination(const std::vector<HPoly>& fs, const std::vector<HPoly>& entries);

struct HoldsExactly {};
struct ThreeTermFailure {
  std::size_t slot = 0;
  HPoly lhs;
  HPoly rhs;
};
using ThreeTermCheck = std::variant<HoldsExactly, ThreeTermFailure>;

/// syz(r,t) * f_p^s = syz(p,t) * f_r^s - syz(p,r) * f_t^s, for p < r < t.
ThreeTermCheck check_three_term(const std::vector<HPoly>& fs, std::size_t p, std::size_t r,
                                std::size_t t);

/// syz(r,t) = via_pt - via_pr with via_pt = syz(p,t) * f_r^s / f_p^s and
/// via_pr = syz(p,r) * f_t^s / f_p^s, when both divisions are exact.
struct SyzygyReduction {
  std::vector<HPoly> via_pt;
  std::vector<HPoly> via_pr;
};

std::optional<SyzygyReduction> reduce_syzygy(const std::vector<HPoly>& fs, std::size_t p,
                                             std::size_t r, std::size_t t);

struct KernelDimensions {
  std::size_t null_ab = 0;             // nullity of (A, -B)(z)
  std::size_t null_a_plus_null_b = 0;  // nullity A(z) + nullity B(z)
};

KernelDimensions kernel_dimension_at(const SyzygyPair& pair, const GaussRat& z);

}  // namespace qcorona
