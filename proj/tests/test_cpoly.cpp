#include <doctest.h>

#include "qcorona/cpoly.hpp"
#include "qcorona/errors.hpp"
#include "support/gen.hpp"

using namespace qcorona;

namespace {

const CPoly z = cvar();
const GaussRat I = GaussRat::unit_i();

CPoly c(const GaussRat& v) { return CPoly(v); }

CPoly weighted_sum(const std::vector<CPoly>& ws, const std::vector<CPoly>& ps) {
  CPoly s;
  for (std::size_t k = 0; k < ps.size(); ++k) s += ws[k] * ps[k];
  return s;
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(cpoly_arith(ArithOp::mul, z - c(I), z + c(I)) == z * z + c(1));
  CHECK(cpoly_arith(ArithOp::mul, z, CPoly{}).is_zero());
  CHECK(cpoly_arith(ArithOp::add, z + c(1), z - c(1)) == c(2) * z);
  CHECK(cpoly_arith(ArithOp::sub, z, z).degree() == -1);
  CHECK(to_string(z * z + c(1)) == "z^2 + 1");
  CHECK(to_string(c(I) * z + c(1)) == "iz + 1");
}

TEST_CASE("hat conjugates coefficients") {
  CHECK(hat(c(I) * z + c(1)) == c(-I) * z + c(1));
  CHECK(hat(z * z + c(1)) == z * z + c(1));
  const CPoly p = c(3) * z - c(I);
  CHECK(hat(hat(p)) == p);
}

TEST_CASE("evaluation") {
  CHECK(ceval(z * z + c(1), I).is_zero());
  CHECK(ceval(z - c(I), GaussRat(0)) == -I);
}

TEST_CASE("division with remainder") {
  const CPoly a = z * z * z + c(2) * z + c(I), b = z - c(1);
  const auto dm = divmod(a, b);
  CHECK(dm.quotient * b + dm.remainder == a);
  CHECK(dm.remainder.degree() < b.degree());
  CHECK(divide_exact(z * z + c(1), z - c(I)) == z + c(I));
  CHECK_FALSE(divide_exact(z * z + c(1), z - c(1)).has_value());
  CHECK_THROWS_AS(divmod(a, CPoly{}), DivisionByZero);
}

TEST_CASE("gcd is monic and detects common roots") {
  CHECK(gcd(c(3) * (z - c(I)) * (z + c(2)), c(5) * (z - c(I)) * z) == z - c(I));
  CHECK(gcd(z, z - c(1)) == c(1));
  CHECK(gcd(CPoly{}, CPoly{}).is_zero());
  CHECK(gcd(CPoly{}, c(2) * z) == z);
}

TEST_CASE("two-term Bezout identities") {
  auto b = bezout_multi({z, z - c(1)});
  CHECK(b.gcd == c(1));
  CHECK(b.witnesses == std::vector<CPoly>{c(1), c(-1)});

  b = bezout_multi({z * z, z - c(1)});
  CHECK(b.gcd == c(1));
  CHECK(b.witnesses == std::vector<CPoly>{c(1), -(z + c(1))});
}

TEST_CASE("Bezout with a unit entry") {
  const auto b = bezout_multi({z - c(I), CPoly{}, z, c(-1)});
  CHECK(b.gcd == c(1));
  CHECK(weighted_sum(b.witnesses, {z - c(I), CPoly{}, z, c(-1)}) == c(1));
  CHECK(b.witnesses[1].is_zero());
}

TEST_CASE("Bezout rejects all-zero input") {
  CHECK_THROWS_AS(bezout_multi({CPoly{}, CPoly{}}), std::invalid_argument);
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part((z - c(1)) * (z - c(1)) * (z + c(I))) == (z - c(1)) * (z + c(I)));
  CHECK(squarefree_part(c(4)) == c(1));
}

TEST_CASE("random identities") {
  qtest::Gen gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    const CPoly a = gen.cpoly(4), b = gen.cpoly(4), e = gen.cpoly(3);
    const GaussRat w = gen.gauss();
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK(ceval(a * b, w) == ceval(a, w) * ceval(b, w));
    CHECK(ceval(a + b, w) == ceval(a, w) + ceval(b, w));
    CHECK(ceval(hat(a), w.conj()) == ceval(a, w).conj());
    CHECK(hat(a * b) == hat(a) * hat(b));
    CHECK((a * b) * e == a * (b * e));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());

    const auto eg = extended_gcd(a, b);
    CHECK(eg.s * a + eg.t * b == eg.gcd);

    // Planted common root: the gcd must vanish there.
    const CPoly root = z - c(w);
    const CPoly g = gcd(a * root, b * root);
    CHECK(ceval(g, w).is_zero());
    if (!a.is_zero() && !ceval(a, w).is_zero()) CHECK(divide_exact(g, root).has_value());

    const std::vector<CPoly> ps{a, b, e, gen.cpoly(2)};
    const bool all_zero = std::all_of(ps.begin(), ps.end(), [](const CPoly& p) { return p.is_zero(); });
    if (!all_zero) {
      const auto bz = bezout_multi(ps);
      CHECK(weighted_sum(bz.witnesses, ps) == bz.gcd);
      CHECK(bz.gcd.leading() == GaussRat(1));
    }
  }
}
