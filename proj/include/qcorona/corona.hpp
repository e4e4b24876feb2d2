#pragma once

// Bezout identities f_1 * h_1 + ... + f_n * h_n = 1 for quaternionic
// polynomials without common zeros.
//
// Pipeline: split every f_l on the slice, solve the first split equation
// <P, u> = 1 with a Bezout identity over Q(i)[z], then correct u by a syzygy
// so that the second split equation holds as well. The correction comes from
// (A, -B)(alpha; beta) = hat_swap(u), solvable globally because the maximal
// minors of (A, -B) are coprime exactly when the f_l have no common zero.

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qcorona/hpoly.hpp"
#include "qcorona/polymatrix.hpp"
#include "qcorona/syzygy.hpp"

namespace qcorona {

struct CoronaInstance {
  std::vector<HPoly> fs;
};

struct CoronaOptions {
  MinorSearch minors;
};

/// The f_l share a zero; the gcd of the maximal minors of (A, -B) vanishes at
/// its slice points. A zero gcd means (A, -B) is rank deficient everywhere.
struct CommonZeroObstruction {
  CPoly gcd;
};

using Validation = std::variant<FullRankCertificate, CommonZeroObstruction, CertificateBudgetExhausted>;

/// Throws std::invalid_argument when every f_l is zero.
Validation validate(const CoronaInstance& inst, const CoronaOptions& opts = {});

/// The split polynomials have a common root: a common zero on the slice.
class CommonSliceZero : public std::runtime_error {
 public:
  explicit CommonSliceZero(CPoly g)
      : std::runtime_error("split components share the root set of " + to_string(g)),
        gcd(std::move(g)) {}
  CPoly gcd;
};

/// u with <(F_1, G_1, ..., F_n, G_n), u> = 1; u[2l] plays H_l and u[2l+1]
/// plays -hat(K_l). Throws CommonSliceZero when no such u exists.
std::vector<CPoly> particular_solution(const std::vector<SplitPair>& splits);

struct Correction {
  std::vector<HPoly> hs;
  std::vector<CPoly> alpha;
  std::vector<CPoly> beta;
  std::vector<CPoly> corrected;  // u + A hat(beta)
};

/// Throws InternalInconsistency when either split equation fails afterwards.
Correction correct_and_assemble(const std::vector<SplitPair>& splits, const std::vector<CPoly>& u,
                                const SyzygyPair& pair, const FullRankCertificate& cert);

struct CoronaTrace {
  std::vector<SplitPair> splits;
  std::vector<CPoly> particular;
  std::vector<CPoly> alpha;
  std::vector<CPoly> beta;
  std::vector<CPoly> corrected;
  std::vector<int> solution_degrees;
};

struct CoronaSolution {
  std::vector<HPoly> hs;
  FullRankCertificate certificate;
  CoronaTrace trace;
};

using CoronaOutcome = std::variant<CoronaSolution, CommonZeroObstruction, CertificateBudgetExhausted>;

CoronaOutcome solve_corona(const CoronaInstance& inst, const CoronaOptions& opts = {});

/// sum_l f_l * h_l == 1, exactly.
bool verify_solution(const std::vector<HPoly>& fs, const std::vector<HPoly>& hs);

struct SphereDiagnosis {
  Sphere sphere;
  std::vector<SphereZeros> per_function;
  bool common_sphere = false;      // every f_l vanishes on the whole sphere
  std::vector<Quat> common_points;  // isolated common zeros
};

struct Diagnosis {
  std::vector<SphereDiagnosis> spheres;
  /// Factor of gcd * hat(gcd) whose spheres have non-rational data.
  CPoly unresolved;
  bool rank_deficient_everywhere = false;
};

Diagnosis diagnose_common_zero(const CoronaInstance& inst, const CommonZeroObstruction& obstruction);

}  // namespace qcorona
