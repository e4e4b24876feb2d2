#pragma once

// Slice regular quaternionic polynomials f(q) = sum_m q^m a_m (coefficients
// on the right). The ring product is the star product, i.e. the Cauchy
// convolution of coefficient sequences. Slices are fixed as I = i, J = j, so a
// coefficient a = x0 + x1 i + x2 j + x3 k splits as (x0 + x1 i) + (x2 + x3 i) j.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcorona/cpoly.hpp"
#include "qcorona/poly.hpp"
#include "qcorona/quaternion.hpp"

namespace qcorona {

using HPoly = Poly<Quat>;

/// q
inline HPoly hvar() { return HPoly::variable(); }

/// Quaternionic polynomial with real coefficients taken from a real-valued
/// CPoly (imaginary parts must vanish).
HPoly from_real_cpoly(const CPoly& p);
/// Real-coefficient HPoly as a CPoly over the slice (throws otherwise).
CPoly to_real_cpoly(const HPoly& f);

bool has_real_coeffs(const HPoly& f);

inline HPoly star_mul(const HPoly& f, const HPoly& g) { return f * g; }

/// f^c: conjugates every coefficient.
HPoly regular_conjugate(const HPoly& f);
/// f^s = f * f^c; always has real coefficients.
HPoly symmetrization(const HPoly& f);

/// f_I = F + G J on the slice I = i, J = j.
struct SplitPair {
  CPoly F;
  CPoly G;

  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

SplitPair split(const HPoly& f);
/// Inverse of split: a_m = alpha_m + beta_m j.
HPoly extend(const SplitPair& p);

/// Star product computed on split components:
/// (F H - G hat(K)) + (F K + G hat(H)) J.
SplitPair split_star(const SplitPair& f, const SplitPair& g);

Quat eval_hpoly(const HPoly& f, const Quat& q);
/// Value of the slice function F(z) + G(z) j at z in the slice plane.
Quat slice_value(const SplitPair& p, const GaussRat& z);

/// f(q) g(f(q)^-1 q f(q)), or 0 where f(q) = 0.
Quat star_eval_pointwise(const HPoly& f, const HPoly& g, const Quat& q);

/// The sphere x + y S, identified by x and y^2 so that it stays rational.
struct Sphere {
  Rat x;
  Rat y_squared;

  bool is_real_point() const { return sgn(y_squared) == 0; }
  friend bool operator==(const Sphere&, const Sphere&) = default;
};

std::string to_string(const Sphere& s);

/// f(x + yI) = value + yI * slope for every I in S.
struct SphereValue {
  Quat value;
  Quat slope;
};

SphereValue eval_on_sphere(const HPoly& f, const Sphere& s);

struct NoZero {};
struct SphericalZero {};
struct IsolatedZero {
  Quat point;
};
using SphereZeros = std::variant<NoZero, SphericalZero, IsolatedZero>;

/// Zeros of f on the sphere. On a degenerate sphere (y^2 = 0) the only
/// candidate is the real point x itself.
SphereZeros zeros_on_sphere(const HPoly& f, const Sphere& s);

/// Factors a nonzero real-coefficient polynomial (square-free part) into
/// linear factors with rational roots and quadratics q^2 - 2xq + x^2 + y^2
/// with rational (x, y^2). What cannot be resolved is returned as residual.
struct SphereFactorization {
  std::vector<Sphere> spheres;
  CPoly residual;  // monic, constant 1 when fully resolved
};

SphereFactorization rational_spheres(const CPoly& real_poly);

struct ZeroSet {
  std::vector<Sphere> spherical_zeros;
  std::vector<std::pair<Sphere, Quat>> isolated_zeros;
  CPoly residual;
};

/// Throws std::invalid_argument for f = 0.
ZeroSet classify_zeros(const HPoly& f);

/// f^{-*} = (f^s)^{-1} f^c, kept as the exact pair (f^c, f^s).
struct ReciprocalPair {
  HPoly numerator;
  HPoly denominator;
};

/// Throws std::invalid_argument for f = 0.
ReciprocalPair reciprocal_pair(const HPoly& f);

/// Exact division of every coefficient component by a real-coefficient
/// polynomial; nullopt when some component leaves a remainder.
std::optional<HPoly> divide_by_real(const HPoly& f, const HPoly& real_divisor);

std::string to_string(const HPoly& f);

}  // namespace qcorona
