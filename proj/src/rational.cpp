#include "qcorona/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "qcorona/errors.hpp"

namespace qcorona {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Int parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_decimal_integer(num_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Int num = parse_int(num_text);
  Int den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_decimal_integer(den_text)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    den = parse_int(den_text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) {
    return std::nullopt;
  }
  Rat root(sqrt(r.get_num()), sqrt(r.get_den()));
  root.canonicalize();
  return root;
}

GaussRat GaussRat::inverse() const {
  const Rat n = norm();
  if (sgn(n) == 0) throw DivisionByZero("inverse of zero Gaussian rational");
  return {re / n, -im / n};
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  Rat r = re * o.re - im * o.im;
  Rat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

std::string to_string(const GaussRat& z) {
  if (z.is_real()) return to_string(z.re);
  std::string out;
  if (sgn(z.re) != 0) out = to_string(z.re);
  const Rat mag = abs(z.im);
  out += sgn(z.im) < 0 ? "-" : (out.empty() ? "" : "+");
  if (mag != 1) out += to_string(mag);
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

}  // namespace qcorona
