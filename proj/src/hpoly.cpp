#include "qcorona/hpoly.hpp"

#include <stdexcept>

#include "qcorona/errors.hpp"

namespace qcorona {

HPoly from_real_cpoly(const CPoly& p) {
  std::vector<Quat> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    if (!c.is_real()) throw std::invalid_argument("from_real_cpoly: non-real coefficient");
    out.emplace_back(c.re, 0, 0, 0);
  }
  return HPoly(std::move(out));
}

CPoly to_real_cpoly(const HPoly& f) {
  std::vector<GaussRat> out;
  out.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    if (!c.is_real()) throw std::invalid_argument("to_real_cpoly: non-real coefficient");
    out.emplace_back(c.x0);
  }
  return CPoly(std::move(out));
}

bool has_real_coeffs(const HPoly& f) {
  for (const auto& c : f.coeffs()) {
    if (!c.is_real()) return false;
  }
  return true;
}

HPoly regular_conjugate(const HPoly& f) {
  return f.map([](const Quat& c) { return c.conj(); });
}

HPoly symmetrization(const HPoly& f) { return f * regular_conjugate(f); }

SplitPair split(const HPoly& f) {
  std::vector<GaussRat> F, G;
  F.reserve(f.size());
  G.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    F.emplace_back(c.x0, c.x1);
    G.emplace_back(c.x2, c.x3);
  }
  return {CPoly(std::move(F)), CPoly(std::move(G))};
}

HPoly extend(const SplitPair& p) {
  const std::size_t n = std::max(p.F.size(), p.G.size());
  std::vector<Quat> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    const GaussRat alpha = p.F.coeff(m);
    const GaussRat beta = p.G.coeff(m);
    // beta j = (b0 + b1 i) j = b0 j + b1 k
    out.emplace_back(alpha.re, alpha.im, beta.re, beta.im);
  }
  return HPoly(std::move(out));
}

SplitPair split_star(const SplitPair& f, const SplitPair& g) {
  return {f.F * g.F - f.G * hat(g.G), f.F * g.G + f.G * hat(g.F)};
}

Quat eval_hpoly(const HPoly& f, const Quat& q) { return f.eval(q); }

Quat slice_value(const SplitPair& p, const GaussRat& z) {
  return Quat(ceval(p.F, z)) + Quat(ceval(p.G, z)) * Quat::j();
}

Quat star_eval_pointwise(const HPoly& f, const HPoly& g, const Quat& q) {
  const Quat fq = eval_hpoly(f, q);
  if (fq.is_zero()) return Quat();
  return fq * eval_hpoly(g, fq.inverse() * q * fq);
}

std::string to_string(const Sphere& s) {
  if (s.is_real_point()) return "{" + to_string(s.x) + "}";
  return to_string(s.x) + "+sqrt(" + to_string(s.y_squared) + ")S";
}

SphereValue eval_on_sphere(const HPoly& f, const Sphere& s) {
  // (x + yI)^m = P_m + yI Q_m with P, Q rational in (x, y^2):
  // P_{m+1} = x P_m - y^2 Q_m, Q_{m+1} = P_m + x Q_m.
  Rat P = 1, Q = 0;
  SphereValue out;
  for (const auto& a : f.coeffs()) {
    out.value += P * a;
    out.slope += Q * a;
    Rat next_p = s.x * P - s.y_squared * Q;
    Rat next_q = P + s.x * Q;
    P = std::move(next_p);
    Q = std::move(next_q);
  }
  return out;
}

SphereZeros zeros_on_sphere(const HPoly& f, const Sphere& s) {
  const auto [A, C] = eval_on_sphere(f, s);
  if (s.is_real_point()) {
    if (A.is_zero()) return IsolatedZero{Quat(s.x, 0, 0, 0)};
    return NoZero{};
  }
  if (C.is_zero()) {
    if (A.is_zero()) return SphericalZero{};
    return NoZero{};
  }
  // A + yI C = 0 forces yI = -A C^{-1}; it must be imaginary with modulus y.
  const bool on_sphere = A.norm2() == s.y_squared * C.norm2() && sgn((A * C.conj()).x0) == 0;
  if (!on_sphere) return NoZero{};
  return IsolatedZero{Quat(s.x, 0, 0, 0) - A * C.inverse()};
}

ZeroSet classify_zeros(const HPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("classify_zeros: zero polynomial");
  ZeroSet out;
  if (f.is_constant()) {
    out.residual = CPoly{GaussRat(1)};
    return out;
  }
  auto factored = rational_spheres(to_real_cpoly(symmetrization(f)));
  for (const auto& sphere : factored.spheres) {
    const auto zeros = zeros_on_sphere(f, sphere);
    if (std::holds_alternative<SphericalZero>(zeros)) {
      out.spherical_zeros.push_back(sphere);
    } else if (const auto* iso = std::get_if<IsolatedZero>(&zeros)) {
      out.isolated_zeros.emplace_back(sphere, iso->point);
    } else {
      // Every sphere carrying a zero of f^s carries a zero of f.
      throw InternalInconsistency("classify_zeros: sphere " + to_string(sphere) +
                                  " of f^s carries no zero of f");
    }
  }
  out.residual = std::move(factored.residual);
  return out;
}

ReciprocalPair reciprocal_pair(const HPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("reciprocal_pair: zero polynomial");
  HPoly fc = regular_conjugate(f);
  HPoly fs = f * fc;
  return {std::move(fc), std::move(fs)};
}

std::optional<HPoly> divide_by_real(const HPoly& f, const HPoly& real_divisor) {
  const CPoly divisor = to_real_cpoly(real_divisor);
  // Components (x0 + x1 i) and (x2 + x3 i) are the split pair; a real divisor
  // acts on both independently.
  const SplitPair parts = split(f);
  auto F = divide_exact(parts.F, divisor);
  auto G = divide_exact(parts.G, divisor);
  if (!F || !G) return std::nullopt;
  return extend({std::move(*F), std::move(*G)});
}

std::string to_string(const HPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int m = f.degree(); m >= 0; --m) {
    const Quat& c = f.coeffs()[m];
    if (c.is_zero()) continue;
    std::string mono = m == 0 ? "" : (m == 1 ? "q" : "q^" + std::to_string(m));
    std::string cs = to_string(c);
    const int nonzero = (sgn(c.x0) != 0) + (sgn(c.x1) != 0) + (sgn(c.x2) != 0) + (sgn(c.x3) != 0);
    const bool negative = nonzero == 1 && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else if (nonzero == 1 && sgn(c.x0) != 0) {
      out += cs + mono;  // real scalars commute with q
    } else {
      out += mono + "(" + cs + ")";
    }
  }
  return out;
}

}  // namespace qcorona
