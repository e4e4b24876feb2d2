#include "qcorona/polymatrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qcorona/errors.hpp"

namespace qcorona {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t d = 0; d < n; ++d) m(d, d) = CPoly{GaussRat(1)};
  return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<CPoly>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("PolyMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<CPoly> PolyMatrix::column(std::size_t c) const {
  std::vector<CPoly> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

PolyMatrix PolyMatrix::select_columns(std::span<const std::size_t> cols) const {
  PolyMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(r, cols[c]);
  }
  return out;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hconcat: row counts differ");
  PolyMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

PolyMatrix PolyMatrix::map(CPoly (*fn)(const CPoly&)) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t idx = 0; idx < e_.size(); ++idx) out.e_[idx] = fn(e_[idx]);
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  return map([](const CPoly& p) { return -p; });
}

std::vector<CPoly> PolyMatrix::apply(std::span<const CPoly> x) const {
  if (x.size() != cols_) throw std::invalid_argument("PolyMatrix::apply: dimension mismatch");
  std::vector<CPoly> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!x[c].is_zero()) out[r] += (*this)(r, c) * x[c];
    }
  }
  return out;
}

PolyMatrix hat(const PolyMatrix& m) {
  return m.map([](const CPoly& p) { return hat(p); });
}

std::size_t scalar_rank(std::vector<GaussRat> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
    }
    const GaussRat inv = a[rank * cols + c].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r * cols + c].is_zero()) continue;
      const GaussRat factor = a[r * cols + c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[r * cols + k] -= factor * a[rank * cols + k];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_at(const PolyMatrix& m, const GaussRat& z) {
  std::vector<GaussRat> values;
  values.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) values.push_back(ceval(m(r, c), z));
  }
  return scalar_rank(std::move(values), m.rows(), m.cols());
}

CPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return CPoly{GaussRat(1)};
  PolyMatrix a = m;
  bool negate = false;
  CPoly prev{GaussRat(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        CPoly numer = a(k, k) * a(r, c) - a(r, k) * a(k, c);
        auto quotient = divide_exact(numer, prev);
        if (!quotient) throw InternalInconsistency("determinant: inexact Bareiss division");
        a(r, c) = std::move(*quotient);
      }
    }
    prev = a(k, k);
  }
  CPoly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

namespace {

CPoly reduce_mod(const CPoly& a, const CPoly& modulus) { return divmod(a, modulus).remainder; }

void pivot_columns_rec(const PolyMatrix& m, const CPoly& modulus, std::vector<ModularPivots>& out) {
  const std::size_t rows = m.rows(), cols = m.cols();
  PolyMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = reduce_mod(m(r, c), modulus);
  }
  std::vector<bool> used(rows, false);
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && pivots.size() < rows; ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (used[r] || a(r, c).is_zero()) continue;
      auto e = extended_gcd(a(r, c), modulus);
      if (e.gcd.degree() > 0) {
        // Zero divisor: the modulus splits into coprime factors.
        pivot_columns_rec(m, e.gcd, out);
        pivot_columns_rec(m, divmod(modulus, e.gcd).quotient, out);
        return;
      }
      const CPoly inv = reduce_mod(e.s, modulus);  // e.s * a(r, c) = 1 mod modulus
      for (std::size_t r2 = 0; r2 < rows; ++r2) {
        if (used[r2] || r2 == r || a(r2, c).is_zero()) continue;
        const CPoly factor = reduce_mod(a(r2, c) * inv, modulus);
        for (std::size_t k = c; k < cols; ++k) {
          if (a(r, k).is_zero()) continue;
          a(r2, k) = reduce_mod(a(r2, k) - factor * a(r, k), modulus);
        }
      }
      used[r] = true;
      pivots.push_back(c);
      break;
    }
  }
  if (pivots.size() == rows) {
    out.push_back({modulus, std::move(pivots)});
  } else {
    out.push_back({modulus, std::nullopt});
  }
}

struct MinorAccumulator {
  const PolyMatrix& m;
  std::size_t budget;
  std::size_t examined = 0;
  CPoly g;
  FullRankCertificate cert;

  bool exhausted() const { return examined == budget; }

  // Records the minor when it lowers the gcd; returns whether it did.
  bool offer(const std::vector<std::size_t>& cols) {
    ++examined;
    CPoly minor = determinant(m.select_columns(cols));
    if (minor.is_zero()) return false;
    CPoly next = gcd(g, minor);
    if (!g.is_zero() && next.degree() == g.degree()) return false;
    cert.minor_columns.push_back(cols);
    cert.minors.push_back(std::move(minor));
    g = std::move(next);
    return true;
  }

  bool done() const { return g.degree() == 0; }

  FullRankCertificate finish() {
    cert.witnesses = bezout_multi(cert.minors).witnesses;
    return std::move(cert);
  }
};

CertificateResult lexicographic_search(const PolyMatrix& m, std::size_t budget) {
  MinorAccumulator acc{m, budget};
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  do {
    if (acc.exhausted()) return CertificateBudgetExhausted{acc.g, acc.examined};
    if (acc.offer(idx) && acc.done()) return acc.finish();
  } while (next_combination(idx, m.cols()));
  return RankObstruction{acc.g};
}

CertificateResult targeted_search(const PolyMatrix& m, std::size_t budget) {
  MinorAccumulator acc{m, budget};
  // Any nonzero minor has degree at most the sum of the row degrees, so rank
  // deficiency at more points than that means every minor vanishes.
  long bound = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int row_deg = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) row_deg = std::max(row_deg, m(r, c).degree());
    bound += row_deg;
  }
  for (long step = 0; step <= 2 * bound + 1 && acc.g.is_zero(); ++step) {
    const long t = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;  // 0, -1, 1, -2, ...
    const CPoly modulus{GaussRat(-t), GaussRat(1)};
    for (const auto& piv : pivot_columns_mod(m, modulus)) {
      if (!piv.columns) continue;
      if (acc.exhausted()) return CertificateBudgetExhausted{acc.g, acc.examined};
      acc.offer(*piv.columns);
    }
  }
  if (acc.g.is_zero()) return RankObstruction{CPoly()};

  while (!acc.done()) {
    bool progressed = false;
    for (const auto& piv : pivot_columns_mod(m, squarefree_part(acc.g))) {
      if (!piv.columns) continue;
      if (acc.exhausted()) return CertificateBudgetExhausted{acc.g, acc.examined};
      progressed = acc.offer(*piv.columns) || progressed;
      if (acc.done()) break;
    }
    if (!progressed) return RankObstruction{acc.g};
  }
  return acc.finish();
}

}  // namespace

std::vector<ModularPivots> pivot_columns_mod(const PolyMatrix& m, const CPoly& modulus) {
  if (modulus.degree() < 1) throw std::invalid_argument("pivot_columns_mod: constant modulus");
  std::vector<ModularPivots> out;
  pivot_columns_rec(m, monic(modulus), out);
  return out;
}

CertificateResult minor_gcd_certificate(const PolyMatrix& m, const MinorSearch& search) {
  if (m.rows() > m.cols()) throw std::invalid_argument("minor_gcd_certificate: rows > cols");
  if (m.rows() == 0) return FullRankCertificate{{{}}, {CPoly{GaussRat(1)}}, {CPoly{GaussRat(1)}}};
  if (search.order == MinorOrder::lexicographic) return lexicographic_search(m, search.budget);
  return targeted_search(m, search.budget);
}

std::string check_certificate(const PolyMatrix& m, const FullRankCertificate& cert) {
  if (cert.minors.size() != cert.minor_columns.size() ||
      cert.witnesses.size() != cert.minors.size()) {
    return "certificate sections have different lengths";
  }
  CPoly combo;
  for (std::size_t k = 0; k < cert.minors.size(); ++k) {
    const auto& cols = cert.minor_columns[k];
    if (cols.size() != m.rows()) return "minor " + std::to_string(k) + " is not maximal";
    for (std::size_t q = 0; q < cols.size(); ++q) {
      if (cols[q] >= m.cols() || (q > 0 && cols[q] <= cols[q - 1])) {
        return "minor " + std::to_string(k) + " has invalid column indices";
      }
    }
    if (!(determinant(m.select_columns(cols)) == cert.minors[k])) {
      return "minor " + std::to_string(k) + " does not match its columns";
    }
    combo += cert.witnesses[k] * cert.minors[k];
  }
  if (!(combo == CPoly{GaussRat(1)})) return "witnesses do not combine the minors to 1";
  return {};
}

std::vector<CPoly> solve_full_rank(const PolyMatrix& m, std::span<const CPoly> rhs,
                                   const FullRankCertificate& cert) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_full_rank: rhs size mismatch");
  if (auto problem = check_certificate(m, cert); !problem.empty()) {
    throw std::invalid_argument("solve_full_rank: certificate inconsistent with matrix: " +
                                problem);
  }
  std::vector<CPoly> x(m.cols());
  for (std::size_t k = 0; k < cert.minors.size(); ++k) {
    if (cert.witnesses[k].is_zero()) continue;
    const auto& cols = cert.minor_columns[k];
    const PolyMatrix square = m.select_columns(cols);
    // Cramer: square * y = minor * rhs with y_j = det(square, column j := rhs).
    for (std::size_t j = 0; j < cols.size(); ++j) {
      PolyMatrix replaced = square;
      for (std::size_t r = 0; r < m.rows(); ++r) replaced(r, j) = rhs[r];
      x[cols[j]] += cert.witnesses[k] * determinant(replaced);
    }
  }
  const auto back = m.apply(x);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!(back[r] == rhs[r])) throw InternalInconsistency("solve_full_rank: M x != rhs");
  }
  return x;
}

}  // namespace qcorona
