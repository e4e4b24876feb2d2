#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and Gaussian rationals,
// the coefficient field of the fixed slice plane R + R i.

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace qcorona {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal integers). The result is canonical.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

/// Exact square root when r is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& r);

class GaussRat {
 public:
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat real, Rat imag = 0) : re(std::move(real)), im(std::move(imag)) {}  // NOLINT

  static GaussRat unit_i() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }
  GaussRat inverse() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussRat& z);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace qcorona
