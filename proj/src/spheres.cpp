// Exact search for the spheres x + y S of a real-coefficient polynomial:
// rational roots (real points) and irreducible quadratics with rational
// (x, y^2). Quadratic factors are found by Kronecker's method on a primitive
// integer representative; a factor with negative discriminant and positive
// leading coefficient is positive at every integer, so only positive divisors
// of the sampled values need to be tried.

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "qcorona/hpoly.hpp"

namespace qcorona {

namespace {

using IntPoly = std::vector<Int>;  // ascending

constexpr unsigned long kTrialDivisionLimit = 1000000;
constexpr std::size_t kMaxKroneckerCombos = 4000000;

IntPoly primitive_integer(const CPoly& p) {
  Int den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.re.get_den());
  IntPoly out;
  Int content = 0;
  for (const auto& c : p.coeffs()) {
    Rat scaled = c.re * den;
    out.push_back(scaled.get_num());
    content = gcd(content, out.back());
  }
  if (sgn(out.back()) < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

CPoly to_cpoly(const IntPoly& p) {
  std::vector<GaussRat> out;
  for (const auto& c : p) out.emplace_back(Rat(c));
  return CPoly(std::move(out));
}

Int eval(const IntPoly& p, const Int& t) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Positive divisors of |n| (n != 0), or nullopt when |n| cannot be factored
// by bounded trial division plus a primality check on the cofactor.
std::optional<std::vector<Int>> positive_divisors(Int n) {
  n = abs(n);
  std::vector<std::pair<Int, unsigned>> factors;
  for (unsigned long d = 2; d <= kTrialDivisionLimit && Int(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      n /= d;
      ++e;
    }
    factors.emplace_back(Int(d), e);
  }
  if (n > 1) {
    const bool surely_prime = n < Int(kTrialDivisionLimit) * kTrialDivisionLimit ||
                              mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    if (!surely_prime) return std::nullopt;
    factors.emplace_back(n, 1);
  }
  std::vector<Int> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Int power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t m = 0; m < base; ++m) divs.push_back(divs[m] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool divides(const CPoly& factor, const CPoly& p) { return divmod(p, factor).remainder.is_zero(); }

// Removes every rational root of the (square-free) polynomial; returns the
// cofactor. Gives up (leaves the polynomial alone) when the divisor sets of
// the constant and leading terms cannot be enumerated.
CPoly strip_rational_roots(CPoly p, std::vector<Sphere>& spheres) {
  if (sgn(p.coeff(0).re) == 0 && p.degree() >= 1) {
    spheres.push_back({0, 0});
    p = divmod(p, cvar()).quotient;
  }
  if (p.degree() < 1) return p;
  const IntPoly ip = primitive_integer(p);
  const auto nums = positive_divisors(ip.front());
  const auto dens = positive_divisors(ip.back());
  if (!nums || !dens) return p;
  for (const auto& b : *dens) {
    for (const auto& a : *nums) {
      for (int sign : {1, -1}) {
        if (p.degree() < 1) return p;
        Rat root(Int(a * sign), b);
        root.canonicalize();
        if (root.get_den() != b) continue;  // already tried in lowest terms
        if (!ceval(p, GaussRat(root)).is_zero()) continue;
        spheres.push_back({root, 0});
        p = divmod(p, CPoly{GaussRat(-root), GaussRat(1)}).quotient;
      }
    }
  }
  return p;
}

Sphere sphere_of_quadratic(const Int& a, const Int& b, const Int& c) {
  // a q^2 + b q + c = a ((q - x)^2 + y^2)
  Rat x(-b, 2 * a);
  x.canonicalize();
  Rat ca(c, a);
  ca.canonicalize();
  return {x, ca - x * x};
}

// One irreducible quadratic factor with negative discriminant, if any.
std::optional<IntPoly> find_quadratic_factor(const CPoly& p) {
  const IntPoly ip = primitive_integer(p);
  if (ip.size() == 3) {
    if (ip[1] * ip[1] - 4 * ip[2] * ip[0] < 0) return ip;
    return std::nullopt;
  }
  if (ip.size() < 5) return std::nullopt;  // a cubic without rational roots

  struct Sample {
    long t;
    std::vector<Int> divs;
  };
  std::vector<Sample> samples;
  for (long t : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L}) {
    const Int v = eval(ip, Int(t));
    if (v == 0) continue;  // impossible once rational roots are gone
    if (auto divs = positive_divisors(v)) samples.push_back({t, std::move(*divs)});
  }
  if (samples.size() < 3) return std::nullopt;
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& l, const Sample& r) { return l.divs.size() < r.divs.size(); });
  samples.resize(3);
  if (samples[0].divs.size() * samples[1].divs.size() * samples[2].divs.size() >
      kMaxKroneckerCombos) {
    return std::nullopt;
  }

  const Int t0 = samples[0].t, t1 = samples[1].t, t2 = samples[2].t;
  const Int& lead = ip.back();
  const Int& constant = ip.front();
  for (const auto& d0 : samples[0].divs) {
    for (const auto& d1 : samples[1].divs) {
      for (const auto& d2 : samples[2].divs) {
        // Newton form: g = d0 + s01 (t - t0) + a (t - t0)(t - t1)
        const Int n01 = d1 - d0;
        if (!mpz_divisible_p(n01.get_mpz_t(), Int(t1 - t0).get_mpz_t())) continue;
        const Int s01 = n01 / (t1 - t0);
        const Int n12 = d2 - d1;
        if (!mpz_divisible_p(n12.get_mpz_t(), Int(t2 - t1).get_mpz_t())) continue;
        const Int s12 = n12 / (t2 - t1);
        const Int na = s12 - s01;
        if (!mpz_divisible_p(na.get_mpz_t(), Int(t2 - t0).get_mpz_t())) continue;
        const Int a = na / (t2 - t0);
        if (sgn(a) <= 0 || !mpz_divisible_p(lead.get_mpz_t(), a.get_mpz_t())) continue;
        const Int b = s01 - a * (t0 + t1);
        const Int c = d0 - s01 * t0 + a * t0 * t1;
        if (sgn(c) == 0 || !mpz_divisible_p(constant.get_mpz_t(), c.get_mpz_t())) continue;
        if (b * b - 4 * a * c >= 0) continue;
        const IntPoly g{c, b, a};
        if (divides(to_cpoly(g), p)) return g;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SphereFactorization rational_spheres(const CPoly& real_poly) {
  if (real_poly.is_zero()) throw std::invalid_argument("rational_spheres: zero polynomial");
  if (!has_real_coeffs(real_poly)) {
    throw std::invalid_argument("rational_spheres: coefficients must be real");
  }
  SphereFactorization out;
  if (real_poly.is_constant()) {
    out.residual = CPoly{GaussRat(1)};
    return out;
  }
  CPoly p = strip_rational_roots(squarefree_part(real_poly), out.spheres);
  while (p.degree() >= 2) {
    const auto g = find_quadratic_factor(p);
    if (!g) break;
    out.spheres.push_back(sphere_of_quadratic((*g)[2], (*g)[1], (*g)[0]));
    p = divmod(p, to_cpoly(*g)).quotient;
  }
  std::sort(out.spheres.begin(), out.spheres.end(), [](const Sphere& l, const Sphere& r) {
    return l.x != r.x ? l.x < r.x : l.y_squared < r.y_squared;
  });
  out.residual = monic(p);
  return out;
}

}  // namespace qcorona
