#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcorona/corona.hpp"

namespace qtest {

using namespace qcorona;

// Seeded generator of small exact values. Numerators in [-span, span],
// denominators in [1, max_den].
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rat rat(long span = 9, long max_den = 4) {
    Rat r(integer(-span, span), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  Rat nonzero_rat() {
    Rat r;
    do r = rat(); while (r == 0);
    return r;
  }

  GaussRat gauss() { return {rat(), rat()}; }
  Quat quat() { return {rat(), rat(), rat(), rat()}; }
  Quat nonzero_quat() {
    Quat q;
    do q = quat(); while (q.is_zero());
    return q;
  }

  // Sparse-ish coefficients keep degree-4 products readable when they fail.
  Quat small_quat() {
    return {rat(3, 2), coin() ? rat(3, 2) : Rat(0), coin() ? rat(3, 2) : Rat(0), coin() ? rat(3, 2) : Rat(0)};
  }

  HPoly hpoly(int degree) {
    std::vector<Quat> c;
    for (int m = 0; m < degree; ++m) c.push_back(small_quat());
    Quat lead;
    do lead = small_quat(); while (lead.is_zero());
    c.push_back(lead);
    return HPoly(std::move(c));
  }
  HPoly hpoly_upto(int max_degree) { return hpoly(static_cast<int>(integer(0, max_degree))); }

  CPoly cpoly(int max_degree) {
    std::vector<GaussRat> c;
    const long d = integer(0, max_degree);
    for (long m = 0; m <= d; ++m) c.push_back(gauss());
    return CPoly(std::move(c));
  }
  std::vector<CPoly> cvec(std::size_t len, int max_degree) {
    std::vector<CPoly> v;
    for (std::size_t k = 0; k < len; ++k) v.push_back(cpoly(max_degree));
    return v;
  }

  // Rational point of the unit sphere of imaginary quaternions, by inverse
  // stereographic projection of a rational point of the plane.
  Quat unit_imaginary() {
    const Rat a = rat(), b = rat();
    const Rat d = a * a + b * b + 1;
    return {0, 2 * a / d, 2 * b / d, (a * a + b * b - 1) / d};
  }

  // f = (q - c) * g + d with c, d nonzero constants; degree of f is 1 + deg g.
  HPoly shifted_product(int g_degree) {
    return (hvar() - HPoly(nonzero_quat())) * hpoly(g_degree) + HPoly(nonzero_quat());
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qtest
