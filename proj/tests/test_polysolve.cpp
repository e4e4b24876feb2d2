#include <doctest.h>

#include "qcorona/polymatrix.hpp"
#include "qcorona/syzygy.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace qcorona;

namespace {

const CPoly z = cvar();
const GaussRat I = GaussRat::unit_i();

CPoly c(const GaussRat& v) { return CPoly(v); }

HPoly lin(const Quat& a) { return hvar() - HPoly(a); }

PolyMatrix random_matrix(qtest::Gen& gen, std::size_t rows, std::size_t cols, int degree) {
  std::vector<std::vector<CPoly>> m(rows);
  for (auto& row : m) {
    for (std::size_t k = 0; k < cols; ++k) row.push_back(gen.cpoly(degree));
  }
  return PolyMatrix::from_rows(m);
}

FullRankCertificate certificate(const CertificateResult& r) {
  REQUIRE(std::holds_alternative<FullRankCertificate>(r));
  return std::get<FullRankCertificate>(r);
}

}  // namespace

TEST_CASE("pointwise rank") {
  const auto A = build_koszul({lin(Quat::i()), lin(Quat::j())}).A;
  CHECK(rank_at(A, GaussRat(0)) == 3);
  CHECK(rank_at(PolyMatrix::identity(4), GaussRat(Rat(3), Rat(-7))) == 4);
  CHECK(rank_at(PolyMatrix(3, 5), I) == 0);
  CHECK(scalar_rank({GaussRat(1), GaussRat(2), GaussRat(2), GaussRat(4)}, 2, 2) == 1);
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
  qtest::Gen gen(17);
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto m = random_matrix(gen, n, n, 2);
      CHECK(determinant(m) == qtest::cofactor_det(m));
    }
  }
  // Leading zero pivot forces a row swap.
  const auto m = PolyMatrix::from_rows({{CPoly{}, z}, {c(1), z + c(I)}});
  CHECK(determinant(m) == -z);
  CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("certificate for a 1x2 matrix") {
  const auto m = PolyMatrix::from_rows({{z, c(1) - z}});
  const auto cert = certificate(minor_gcd_certificate(m, {.order = MinorOrder::lexicographic}));
  CHECK(cert.minors == std::vector<CPoly>{z, c(1) - z});
  CHECK(cert.witnesses == std::vector<CPoly>{c(1), c(1)});
  CHECK(check_certificate(m, cert).empty());
  CHECK(solve_full_rank(m, std::vector<CPoly>{c(1)}, cert) == std::vector<CPoly>{c(1), c(1)});
}

TEST_CASE("solving with the identity and with a unit column") {
  const auto id = PolyMatrix::identity(3);
  const auto cert = certificate(minor_gcd_certificate(id));
  const std::vector<CPoly> rhs{z, c(I), z * z - c(2)};
  CHECK(solve_full_rank(id, rhs, cert) == rhs);

  const auto row = PolyMatrix::from_rows({{z - c(I), CPoly{}, z, c(-1)}});
  const auto rc = certificate(minor_gcd_certificate(row, {.order = MinorOrder::lexicographic}));
  const auto x = solve_full_rank(row, std::vector<CPoly>{c(1)}, rc);
  CHECK(row.apply(x) == std::vector<CPoly>{c(1)});
}

TEST_CASE("Koszul system of the hard pair is certified in both orders") {
  const auto AB = build_koszul({lin(Quat::i()), lin(Quat::j())}).combined();
  for (auto order : {MinorOrder::targeted, MinorOrder::lexicographic}) {
    const auto cert = certificate(minor_gcd_certificate(AB, {.order = order}));
    CHECK(check_certificate(AB, cert).empty());
    CPoly total;
    for (std::size_t k = 0; k < cert.minors.size(); ++k) {
      CHECK(cert.minors[k] == qtest::cofactor_det(AB.select_columns(cert.minor_columns[k])));
      total += cert.witnesses[k] * cert.minors[k];
    }
    CHECK(total == c(1));
  }
}

TEST_CASE("duplicate pair is obstructed at z = i") {
  const auto AB = build_koszul({lin(Quat::j()), lin(Quat::j())}).combined();
  const auto r = minor_gcd_certificate(AB);
  REQUIRE(std::holds_alternative<RankObstruction>(r));
  const CPoly g = std::get<RankObstruction>(r).gcd;
  CHECK(divide_exact(g, z - c(I)).has_value());
  CHECK(rank_at(AB, I) < 4);
  CHECK(rank_at(AB, GaussRat(2)) == 4);
}

TEST_CASE("obstruction roots are exactly the rank drops") {
  qtest::Gen gen(29);
  for (int trial = 0; trial < 10; ++trial) {
    // Rows share the factor (z - t) in every entry of the last row.
    const GaussRat t(gen.rat(), 0);
    auto m = random_matrix(gen, 2, 4, 1);
    for (std::size_t k = 0; k < 4; ++k) m(1, k) = m(1, k) * (z - c(t));
    const auto r = minor_gcd_certificate(m);
    REQUIRE(std::holds_alternative<RankObstruction>(r));
    const CPoly g = std::get<RankObstruction>(r).gcd;
    CHECK(ceval(g, t).is_zero());
    CHECK(rank_at(m, t) < 2);
    CHECK(rank_at(m, t + GaussRat(Rat(1, 7), Rat(1, 3))) == 2);
  }
}

TEST_CASE("random full-rank systems are solved exactly") {
  qtest::Gen gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(gen, 2, 4, 2);
    const auto r = minor_gcd_certificate(m);
    if (!std::holds_alternative<FullRankCertificate>(r)) continue;
    const auto& cert = std::get<FullRankCertificate>(r);
    CHECK(check_certificate(m, cert).empty());
    const std::vector<CPoly> rhs = gen.cvec(2, 3);
    CHECK(m.apply(solve_full_rank(m, rhs, cert)) == rhs);
  }
}

TEST_CASE("tampered certificates are rejected") {
  const auto m = PolyMatrix::from_rows({{z, c(1) - z}});
  auto cert = certificate(minor_gcd_certificate(m, {.order = MinorOrder::lexicographic}));
  auto bad = cert;
  bad.witnesses[0] = c(2);
  CHECK_FALSE(check_certificate(m, bad).empty());
  bad = cert;
  bad.minors[1] = z;
  CHECK_FALSE(check_certificate(m, bad).empty());
  bad = cert;
  bad.minor_columns[0] = {5};
  CHECK_FALSE(check_certificate(m, bad).empty());
  CHECK_THROWS_AS(solve_full_rank(m, std::vector<CPoly>{c(1)}, bad), std::invalid_argument);
}

TEST_CASE("budget exhaustion is distinct from an obstruction") {
  const auto AB = build_koszul({lin(Quat::i()), lin(Quat::j()), lin(Quat::k())}).combined();
  const auto r = minor_gcd_certificate(AB, {.budget = 1, .order = MinorOrder::lexicographic});
  REQUIRE(std::holds_alternative<CertificateBudgetExhausted>(r));
  CHECK(std::get<CertificateBudgetExhausted>(r).minors_examined == 1);
}
