#pragma once

#include <iosfwd>
#include <string>

#include "qcorona/rational.hpp"

namespace qcorona {

/// Exact quaternion x0 + x1 i + x2 j + x3 k.
class Quat {
 public:
  Rat x0, x1, x2, x3;

  Quat() = default;
  Quat(long v) : x0(v) {}  // NOLINT(google-explicit-constructor)
  Quat(Rat a, Rat b, Rat c, Rat d)
      : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)), x3(std::move(d)) {}
  /// Embeds the slice plane: re + im i.
  explicit Quat(const GaussRat& z) : x0(z.re), x1(z.im) {}

  static Quat i() { return {0, 1, 0, 0}; }
  static Quat j() { return {0, 0, 1, 0}; }
  static Quat k() { return {0, 0, 0, 1}; }

  const Rat& real() const { return x0; }
  Quat imag() const { return {0, x1, x2, x3}; }
  Quat conj() const { return {x0, -x1, -x2, -x3}; }
  /// |q|^2 = q conj(q).
  Rat norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  bool is_zero() const { return sgn(x0) == 0 && is_imag_zero(); }
  bool is_real() const { return is_imag_zero(); }
  Quat inverse() const;

  Quat& operator+=(const Quat& o);
  Quat& operator-=(const Quat& o);
  Quat& operator*=(const Quat& o);
  Quat& operator*=(const Rat& s);

  friend Quat operator+(Quat a, const Quat& b) { return a += b; }
  friend Quat operator-(Quat a, const Quat& b) { return a -= b; }
  friend Quat operator*(const Quat& a, const Quat& b);
  friend Quat operator*(Quat a, const Rat& s) { return a *= s; }
  friend Quat operator*(const Rat& s, Quat a) { return a *= s; }
  friend Quat operator-(const Quat& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
  friend bool operator==(const Quat& a, const Quat& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }

 private:
  bool is_imag_zero() const { return sgn(x1) == 0 && sgn(x2) == 0 && sgn(x3) == 0; }
};

inline Quat qmul(const Quat& a, const Quat& b) { return a * b; }
/// Throws DivisionByZero for q = 0.
inline Quat qinv(const Quat& q) { return q.inverse(); }

/// q = x + y * axis with y >= 0. For real q the axis is i.
struct SliceForm {
  Rat x;
  Rat y;
  Quat axis;

  Quat reconstruct() const { return Quat(x, 0, 0, 0) + y * axis; }
};

/// Throws NonRationalRadius when |Im(q)| is irrational.
SliceForm slice_decompose(const Quat& q);

std::string to_string(const Quat& q);
std::ostream& operator<<(std::ostream& os, const Quat& q);

}  // namespace qcorona
