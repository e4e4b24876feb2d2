#include "qcorona/corona.hpp"

#include <algorithm>

#include "qcorona/errors.hpp"

namespace qcorona {

namespace {

void require_nonzero(const CoronaInstance& inst) {
  if (std::all_of(inst.fs.begin(), inst.fs.end(), [](const HPoly& f) { return f.is_zero(); })) {
    throw std::invalid_argument("corona instance: every polynomial is zero");
  }
}

CPoly dot(const std::vector<CPoly>& a, const std::vector<CPoly>& b) {
  CPoly sum;
  for (std::size_t m = 0; m < a.size(); ++m) sum += a[m] * b[m];
  return sum;
}

const CPoly& one() {
  static const CPoly p{GaussRat(1)};
  return p;
}

}  // namespace

Validation validate(const CoronaInstance& inst, const CoronaOptions& opts) {
  require_nonzero(inst);
  const auto pair = build_koszul(inst.fs);
  auto result = minor_gcd_certificate(pair.combined(), opts.minors);
  if (auto* cert = std::get_if<FullRankCertificate>(&result)) return std::move(*cert);
  if (auto* obs = std::get_if<RankObstruction>(&result)) return CommonZeroObstruction{obs->gcd};
  return std::get<CertificateBudgetExhausted>(result);
}

std::vector<CPoly> particular_solution(const std::vector<SplitPair>& splits) {
  const auto P = slice_vector(splits);
  if (std::all_of(P.begin(), P.end(), [](const CPoly& p) { return p.is_zero(); })) {
    throw CommonSliceZero(CPoly());
  }
  auto bez = bezout_multi(P);
  if (!(bez.gcd == one())) throw CommonSliceZero(bez.gcd);
  return bez.witnesses;
}

Correction correct_and_assemble(const std::vector<SplitPair>& splits, const std::vector<CPoly>& u,
                                const SyzygyPair& pair, const FullRankCertificate& cert) {
  const auto P = slice_vector(splits);
  if (u.size() != P.size()) throw std::invalid_argument("correct_and_assemble: bad u length");
  const std::size_t cols = pair.A.cols();

  const auto rhs = hat_swap(u);
  const auto sol = solve_full_rank(pair.combined(), rhs, cert);
  Correction out;
  out.alpha.assign(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(cols));
  out.beta.assign(sol.begin() + static_cast<std::ptrdiff_t>(cols), sol.end());

  std::vector<CPoly> hat_beta;
  hat_beta.reserve(cols);
  for (const auto& b : out.beta) hat_beta.push_back(hat(b));
  const auto shift = pair.A.apply(hat_beta);
  out.corrected = u;
  for (std::size_t m = 0; m < u.size(); ++m) out.corrected[m] += shift[m];

  // First split equation: <P, v> = 1. Second: hat_swap(v) is a syzygy of P.
  if (!(dot(P, out.corrected) == one())) {
    throw InternalInconsistency("correct_and_assemble: first split equation fails");
  }
  if (!dot(P, hat_swap(out.corrected)).is_zero()) {
    throw InternalInconsistency("correct_and_assemble: second split equation fails");
  }

  for (std::size_t l = 0; l < splits.size(); ++l) {
    SplitPair h{out.corrected[2 * l], -hat(out.corrected[2 * l + 1])};
    out.hs.push_back(extend(h));
  }
  std::vector<HPoly> fs;
  for (const auto& s : splits) fs.push_back(extend(s));
  if (!verify_solution(fs, out.hs)) {
    throw InternalInconsistency("correct_and_assemble: sum f_l * h_l != 1");
  }
  return out;
}

CoronaOutcome solve_corona(const CoronaInstance& inst, const CoronaOptions& opts) {
  require_nonzero(inst);
  const auto pair = build_koszul(inst.fs);

  if (inst.fs.size() == 1) {
    // A nonconstant quaternionic polynomial always has a zero.
    const HPoly& f = inst.fs.front();
    if (!f.is_constant()) {
      return CommonZeroObstruction{monic(to_real_cpoly(symmetrization(f)))};
    }
  }

  auto validation = validate(inst, opts);
  if (auto* obs = std::get_if<CommonZeroObstruction>(&validation)) return std::move(*obs);
  if (auto* budget = std::get_if<CertificateBudgetExhausted>(&validation)) return std::move(*budget);
  auto cert = std::get<FullRankCertificate>(std::move(validation));

  CoronaSolution out;
  out.trace.splits = pair.splits;
  if (inst.fs.size() == 1) {
    out.hs.push_back(HPoly{inst.fs.front().leading().inverse()});
  } else {
    out.trace.particular = particular_solution(pair.splits);
    auto corr = correct_and_assemble(pair.splits, out.trace.particular, pair, cert);
    out.hs = std::move(corr.hs);
    out.trace.alpha = std::move(corr.alpha);
    out.trace.beta = std::move(corr.beta);
    out.trace.corrected = std::move(corr.corrected);
  }
  if (!verify_solution(inst.fs, out.hs)) {
    throw InternalInconsistency("solve_corona: sum f_l * h_l != 1");
  }
  for (const auto& h : out.hs) out.trace.solution_degrees.push_back(h.degree());
  out.certificate = std::move(cert);
  return out;
}

bool verify_solution(const std::vector<HPoly>& fs, const std::vector<HPoly>& hs) {
  if (fs.size() != hs.size()) return false;
  return left_combination(fs, hs) == HPoly{Quat(1)};
}

Diagnosis diagnose_common_zero(const CoronaInstance& inst, const CommonZeroObstruction& obstruction) {
  Diagnosis out;
  if (obstruction.gcd.is_zero()) {
    out.rank_deficient_everywhere = true;
    return out;
  }
  // Spheres through the roots of gcd and of hat(gcd) are those of gcd * hat(gcd),
  // which has real coefficients.
  const auto factored = rational_spheres(obstruction.gcd * hat(obstruction.gcd));
  out.unresolved = factored.residual;
  for (const auto& sphere : factored.spheres) {
    SphereDiagnosis d{sphere, {}, false, {}};
    bool all_spherical = true;
    bool some_missing = false;
    std::vector<Quat> points;
    for (const auto& f : inst.fs) {
      auto zeros = zeros_on_sphere(f, sphere);
      if (std::holds_alternative<NoZero>(zeros)) some_missing = true;
      if (const auto* iso = std::get_if<IsolatedZero>(&zeros)) {
        all_spherical = false;
        points.push_back(iso->point);
      }
      d.per_function.push_back(std::move(zeros));
    }
    if (!some_missing) {
      if (all_spherical) {
        d.common_sphere = true;
      } else if (std::all_of(points.begin(), points.end(),
                             [&](const Quat& q) { return q == points.front(); })) {
        d.common_points.push_back(points.front());
      }
    }
    out.spheres.push_back(std::move(d));
  }
  return out;
}

}  // namespace qcorona
