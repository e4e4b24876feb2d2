#include <doctest.h>

#include "qcorona/corona.hpp"
#include "support/gen.hpp"

using namespace qcorona;

namespace {

const HPoly q = hvar();
const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
const CPoly z = cvar();
const GaussRat I = GaussRat::unit_i();

HPoly h(const Quat& a) { return HPoly(a); }
CPoly c(const GaussRat& v) { return CPoly(v); }

CoronaSolution solved(const CoronaOutcome& out) {
  REQUIRE(std::holds_alternative<CoronaSolution>(out));
  return std::get<CoronaSolution>(out);
}

}  // namespace

TEST_CASE("two functions vanishing on the same sphere") {
  const std::vector<HPoly> fs{q - h(i), q - h(j)};
  CHECK(std::holds_alternative<FullRankCertificate>(validate({fs})));
  const auto sol = solved(solve_corona({fs}));
  CHECK(left_combination(fs, sol.hs) == h(1));
  CHECK(verify_solution(fs, sol.hs));
  CHECK(sol.trace.particular == std::vector<CPoly>{CPoly{}, CPoly{}, CPoly{}, c(-1)});
  CHECK(sol.trace.solution_degrees.size() == 2);
}

TEST_CASE("fixed constant solution of the hard pair") {
  const Rat half(1, 2);
  const std::vector<HPoly> hs{h((i - j) * half), h((j - i) * half)};
  CHECK(verify_solution({q - h(i), q - h(j)}, hs));
}

TEST_CASE("zeros on different spheres") {
  const std::vector<HPoly> fs{q - h(i), q - h(Quat(2) * j)};
  CHECK(verify_solution(fs, solved(solve_corona({fs})).hs));
}

TEST_CASE("common zero is an obstruction and is located") {
  const std::vector<HPoly> fs{q - h(j), q - h(j)};
  const auto out = solve_corona({fs});
  REQUIRE(std::holds_alternative<CommonZeroObstruction>(out));
  const auto& obs = std::get<CommonZeroObstruction>(out);
  CHECK(divide_exact(obs.gcd, z - c(I)).has_value());

  const auto d = diagnose_common_zero({fs}, obs);
  REQUIRE(d.spheres.size() == 1);
  CHECK(d.spheres[0].sphere == Sphere{0, 1});
  CHECK(d.spheres[0].common_points == std::vector<Quat>{j});
  CHECK_FALSE(d.spheres[0].common_sphere);

  // No claimed solution can pass.
  CHECK_FALSE(verify_solution(fs, {h(Rat(1, 2) * Quat(1)), h(Rat(1, 2) * Quat(1))}));
}

TEST_CASE("common real zero") {
  const std::vector<HPoly> fs{q - h(1), (q - h(1)) * h(i)};
  const auto out = solve_corona({fs});
  REQUIRE(std::holds_alternative<CommonZeroObstruction>(out));
  const auto d = diagnose_common_zero({fs}, std::get<CommonZeroObstruction>(out));
  REQUIRE(d.spheres.size() == 1);
  CHECK(d.spheres[0].sphere == Sphere{1, 0});
  CHECK(d.spheres[0].common_points == std::vector<Quat>{Quat(1)});
}

TEST_CASE("common spherical zero") {
  const std::vector<HPoly> fs{q * q + h(1), (q * q + h(1)) * (q - h(k))};
  const auto out = solve_corona({fs});
  REQUIRE(std::holds_alternative<CommonZeroObstruction>(out));
  const auto d = diagnose_common_zero({fs}, std::get<CommonZeroObstruction>(out));
  REQUIRE_FALSE(d.spheres.empty());
  CHECK(d.spheres[0].common_sphere);
}

TEST_CASE("common zero on an irrational sphere stays unresolved") {
  const HPoly f = q * q - h(2);
  const std::vector<HPoly> fs{f, f * h(j) + f * q};
  const auto out = solve_corona({fs});
  REQUIRE(std::holds_alternative<CommonZeroObstruction>(out));
  const auto d = diagnose_common_zero({fs}, std::get<CommonZeroObstruction>(out));
  CHECK(d.unresolved.degree() > 0);
  CHECK(d.spheres.empty());
}

TEST_CASE("single function") {
  const auto sol = solved(solve_corona({{h(2)}}));
  CHECK(sol.hs == std::vector<HPoly>{h(Rat(1, 2) * Quat(1))});
  CHECK(particular_solution({split(h(2))}) == std::vector<CPoly>{c(GaussRat(Rat(1, 2))), CPoly{}});

  const auto unit = solved(solve_corona({{h(Quat(1, 1, 0, 0))}}));
  CHECK(verify_solution({h(Quat(1, 1, 0, 0))}, unit.hs));

  const auto out = solve_corona({{q - h(k)}});
  REQUIRE(std::holds_alternative<CommonZeroObstruction>(out));
  CHECK(std::get<CommonZeroObstruction>(out).gcd == z * z + c(1));
}

TEST_CASE("particular solution of a real pair") {
  const auto u = particular_solution({split(q), split(q - h(1))});
  CHECK(u == std::vector<CPoly>{c(1), CPoly{}, c(-1), CPoly{}});
}

TEST_CASE("common slice zero is reported") {
  CHECK_THROWS_AS(particular_solution({split(q - h(i)), split(q * q + h(1))}), CommonSliceZero);
}

TEST_CASE("all-zero instances are rejected") {
  CHECK_THROWS_AS(validate({{HPoly{}, HPoly{}}}), std::invalid_argument);
  CHECK_THROWS_AS(solve_corona({{HPoly{}}}), std::invalid_argument);
}

TEST_CASE("zero entries next to a unit") {
  const std::vector<HPoly> fs{HPoly{}, h(j)};
  CHECK(verify_solution(fs, solved(solve_corona({fs})).hs));
}

TEST_CASE("three functions on one sphere") {
  const std::vector<HPoly> fs{q - h(i), q - h(j), q - h(k)};
  const auto sol = solved(solve_corona({fs}));
  CHECK(verify_solution(fs, sol.hs));
  CHECK(check_certificate(build_koszul(fs).combined(), sol.certificate).empty());
}

TEST_CASE("lexicographic minor order also solves the hard pair") {
  CoronaOptions opts;
  opts.minors.order = MinorOrder::lexicographic;
  const std::vector<HPoly> fs{q - h(i), q - h(j)};
  CHECK(verify_solution(fs, solved(solve_corona({fs}, opts)).hs));
}

TEST_CASE("solutions evaluate to one everywhere") {
  qtest::Gen gen(808);
  for (int trial = 0; trial < 6; ++trial) {
    const std::vector<HPoly> fs{gen.shifted_product(1), gen.shifted_product(1)};
    const auto out = solve_corona({fs});
    if (!std::holds_alternative<CoronaSolution>(out)) continue;
    const auto& hs = std::get<CoronaSolution>(out).hs;
    for (int p = 0; p < 5; ++p) {
      const Quat pt = gen.quat();
      Quat total;
      for (std::size_t l = 0; l < fs.size(); ++l) total = total + star_eval_pointwise(fs[l], hs[l], pt);
      CHECK(total == Quat(1));
    }
  }
}

TEST_CASE("solvable exactly when validated") {
  qtest::Gen gen(909);
  for (int trial = 0; trial < 8; ++trial) {
    // Half the instances share a planted linear factor on the left.
    const HPoly common = q - h(Quat(gen.rat(), 0, 0, 0) + gen.rat() * gen.unit_imaginary());
    std::vector<HPoly> fs{gen.hpoly(1), gen.hpoly(1)};
    if (trial % 2 == 0) {
      for (auto& f : fs) f = star_mul(common, f);
    }
    const bool ok = std::holds_alternative<FullRankCertificate>(validate({fs}));
    const auto out = solve_corona({fs});
    CHECK(ok == std::holds_alternative<CoronaSolution>(out));
    if (trial % 2 == 0) CHECK_FALSE(ok);
  }
}
