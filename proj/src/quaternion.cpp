#include "qcorona/quaternion.hpp"

#include <array>
#include <ostream>

#include "qcorona/errors.hpp"

namespace qcorona {

Quat Quat::inverse() const {
  const Rat n = norm2();
  if (sgn(n) == 0) throw DivisionByZero("inverse of zero quaternion");
  Quat c = conj();
  c *= Rat(1) / n;
  return c;
}

Quat& Quat::operator+=(const Quat& o) {
  x0 += o.x0;
  x1 += o.x1;
  x2 += o.x2;
  x3 += o.x3;
  return *this;
}

Quat& Quat::operator-=(const Quat& o) {
  x0 -= o.x0;
  x1 -= o.x1;
  x2 -= o.x2;
  x3 -= o.x3;
  return *this;
}

Quat& Quat::operator*=(const Quat& o) { return *this = *this * o; }

Quat& Quat::operator*=(const Rat& s) {
  x0 *= s;
  x1 *= s;
  x2 *= s;
  x3 *= s;
  return *this;
}

Quat operator*(const Quat& a, const Quat& b) {
  // ij = k, jk = i, ki = j; ji = -k, kj = -i, ik = -j.
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

SliceForm slice_decompose(const Quat& q) {
  const Quat im = q.imag();
  if (im.is_zero()) return {q.x0, 0, Quat::i()};
  const auto radius = exact_sqrt(im.norm2());
  if (!radius) {
    throw NonRationalRadius("|Im(q)|^2 = " + to_string(im.norm2()) + " is not a rational square");
  }
  Quat axis = im;
  axis *= Rat(1) / *radius;
  return {q.x0, *radius, axis};
}

std::string to_string(const Quat& q) {
  if (q.is_zero()) return "0";
  static const std::array<const char*, 4> units{"", "i", "j", "k"};
  const std::array<const Rat*, 4> parts{&q.x0, &q.x1, &q.x2, &q.x3};
  std::string out;
  for (int t = 0; t < 4; ++t) {
    const Rat& c = *parts[t];
    if (sgn(c) == 0) continue;
    const Rat mag = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (t == 0 || mag != 1) out += to_string(mag);
    out += units[t];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << to_string(q); }

}  // namespace qcorona
