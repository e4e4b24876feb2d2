#pragma once

// Polynomials over the Gaussian rationals Q(i): the slice-plane functions
// F, G, H, K of a split quaternionic polynomial.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcorona/poly.hpp"
#include "qcorona/rational.hpp"

namespace qcorona {

using CPoly = Poly<GaussRat>;

enum class ArithOp { add, sub, mul };

CPoly cpoly_arith(ArithOp op, const CPoly& a, const CPoly& b);

/// z
inline CPoly cvar() { return CPoly::variable(); }

/// hat(F)(z) = conj(F(conj z)): conjugates every coefficient.
CPoly hat(const CPoly& a);

GaussRat ceval(const CPoly& a, const GaussRat& z);

CPoly derivative(const CPoly& a);

/// Scales a nonzero polynomial to leading coefficient 1; zero stays zero.
CPoly monic(const CPoly& a);

bool has_real_coeffs(const CPoly& a);

struct DivMod {
  CPoly quotient;
  CPoly remainder;
};

/// Euclidean division; throws DivisionByZero for b = 0.
DivMod divmod(const CPoly& a, const CPoly& b);

/// a / b when b divides a exactly.
std::optional<CPoly> divide_exact(const CPoly& a, const CPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
CPoly gcd(const CPoly& a, const CPoly& b);

struct ExtendedGcd {
  CPoly gcd;  // monic, or zero when a = b = 0
  CPoly s;
  CPoly t;  // s a + t b = gcd
};

ExtendedGcd extended_gcd(const CPoly& a, const CPoly& b);

struct Bezout {
  CPoly gcd;
  std::vector<CPoly> witnesses;  // sum_k witnesses[k] * ps[k] = gcd
};

/// Multi-polynomial Bezout identity. The identity is re-checked before
/// returning. Throws std::invalid_argument when every input is zero.
Bezout bezout_multi(const std::vector<CPoly>& ps);

/// Square-free part of a nonzero polynomial, monic.
CPoly squarefree_part(const CPoly& a);

std::string to_string(const CPoly& a, const std::string& var = "z");

}  // namespace qcorona
