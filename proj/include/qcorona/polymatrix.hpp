#pragma once

// Matrices over Q(i)[z]: pointwise rank, fraction-free determinants, and the
// maximal-minor certificate that a wide matrix has full row rank at every
// point of the plane, together with the solver it enables.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qcorona/cpoly.hpp"

namespace qcorona {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);
  /// Throws std::invalid_argument when a row length differs.
  static PolyMatrix from_rows(const std::vector<std::vector<CPoly>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CPoly& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const CPoly& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  std::vector<CPoly> column(std::size_t c) const;
  PolyMatrix select_columns(std::span<const std::size_t> cols) const;
  /// [this | other]
  PolyMatrix hconcat(const PolyMatrix& other) const;
  PolyMatrix map(CPoly (*fn)(const CPoly&)) const;
  PolyMatrix operator-() const;

  std::vector<CPoly> apply(std::span<const CPoly> x) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CPoly> e_;
};

/// Entry-wise hat.
PolyMatrix hat(const PolyMatrix& m);

/// Exact rank of a scalar matrix over Q(i), given row-major.
std::size_t scalar_rank(std::vector<GaussRat> entries, std::size_t rows, std::size_t cols);

std::size_t rank_at(const PolyMatrix& m, const GaussRat& z);

/// Bareiss fraction-free elimination over the polynomial ring.
/// Throws std::invalid_argument for a non-square matrix.
CPoly determinant(const PolyMatrix& m);

struct FullRankCertificate {
  std::vector<std::vector<std::size_t>> minor_columns;
  std::vector<CPoly> minors;
  std::vector<CPoly> witnesses;  // sum_k witnesses[k] * minors[k] = 1
};

/// Every maximal minor was examined and their gcd is not 1; its roots are
/// exactly the points where the rank drops. A zero gcd means the matrix is
/// rank deficient everywhere.
struct RankObstruction {
  CPoly gcd;
};

/// The enumeration cap was hit before the minor gcd reached 1. Not a proof of
/// anything.
struct CertificateBudgetExhausted {
  CPoly partial_gcd;
  std::size_t minors_examined = 0;
};

using CertificateResult =
    std::variant<FullRankCertificate, RankObstruction, CertificateBudgetExhausted>;

constexpr std::size_t kDefaultMinorBudget = 2000;

enum class MinorOrder {
  /// Each next column set comes from Gaussian elimination modulo the
  /// square-free part of the current minor gcd, so that its minor is a unit
  /// modulo (a factor of) that gcd. Rank deficiency modulo a factor proves its
  /// roots are rank-drop points.
  targeted,
  /// Plain lexicographic enumeration of column sets.
  lexicographic,
};

struct MinorSearch {
  std::size_t budget = kDefaultMinorBudget;  // determinants evaluated
  MinorOrder order = MinorOrder::targeted;
};

/// Accumulates the gcd of maximal minors until it becomes 1 (certificate),
/// every remaining root is shown to be a rank-drop point (obstruction), or the
/// budget is spent. Requires rows <= cols.
///
/// With the targeted order the obstruction gcd has exactly the rank-drop
/// points as roots, though its multiplicities may exceed those of the gcd of
/// all minors.
CertificateResult minor_gcd_certificate(const PolyMatrix& m, const MinorSearch& search = {});

/// Column sets selected by elimination over Q(i)[z]/(modulus), one per
/// coprime factor the modulus splits into along the way. A factor without a
/// column set is one modulo which m has rank < rows.
struct ModularPivots {
  CPoly modulus;
  std::optional<std::vector<std::size_t>> columns;
};

/// modulus must be square-free and nonconstant.
std::vector<ModularPivots> pivot_columns_mod(const PolyMatrix& m, const CPoly& modulus);

/// Re-derives every minor and the Bezout identity. Returns a description of
/// the first mismatch, or an empty string when the certificate is valid.
std::string check_certificate(const PolyMatrix& m, const FullRankCertificate& cert);

/// Solves m x = rhs exactly from a certificate (Cramer per minor, combined by
/// the Bezout witnesses). Throws std::invalid_argument when the certificate
/// does not belong to m; the solution is re-checked before returning.
std::vector<CPoly> solve_full_rank(const PolyMatrix& m, std::span<const CPoly> rhs,
                                   const FullRankCertificate& cert);

}  // namespace qcorona
