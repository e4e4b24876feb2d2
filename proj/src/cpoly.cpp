#include "qcorona/cpoly.hpp"

#include <stdexcept>

#include "qcorona/errors.hpp"

namespace qcorona {

CPoly cpoly_arith(ArithOp op, const CPoly& a, const CPoly& b) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

CPoly hat(const CPoly& a) {
  return a.map([](const GaussRat& c) { return c.conj(); });
}

GaussRat ceval(const CPoly& a, const GaussRat& z) { return a.eval(z); }

CPoly derivative(const CPoly& a) {
  std::vector<GaussRat> out;
  for (std::size_t m = 1; m < a.size(); ++m) {
    out.push_back(a.coeffs()[m] * GaussRat(static_cast<long>(m)));
  }
  return CPoly(std::move(out));
}

CPoly monic(const CPoly& a) {
  if (a.is_zero()) return a;
  return scale_left(a.leading().inverse(), a);
}

bool has_real_coeffs(const CPoly& a) {
  for (const auto& c : a.coeffs()) {
    if (!c.is_real()) return false;
  }
  return true;
}

DivMod divmod(const CPoly& a, const CPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {CPoly(), a};
  const GaussRat lead_inv = b.leading().inverse();
  std::vector<GaussRat> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<GaussRat> quo(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t top = rem.size(); top-- > db;) {
    if (rem[top].is_zero()) continue;
    const GaussRat factor = rem[top] * lead_inv;
    const std::size_t shift = top - db;
    quo[shift] = factor;
    for (std::size_t m = 0; m <= db; ++m) rem[shift + m] -= factor * b.coeffs()[m];
  }
  rem.resize(db);
  return {CPoly(std::move(quo)), CPoly(std::move(rem))};
}

std::optional<CPoly> divide_exact(const CPoly& a, const CPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

CPoly gcd(const CPoly& a, const CPoly& b) {
  CPoly x = monic(a);
  CPoly y = monic(b);
  while (!y.is_zero()) {
    CPoly r = monic(divmod(x, y).remainder);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ExtendedGcd extended_gcd(const CPoly& a, const CPoly& b) {
  // Invariants: r0 = s0 a + t0 b, r1 = s1 a + t1 b.
  CPoly r0 = a, r1 = b;
  CPoly s0{GaussRat(1)}, s1;
  CPoly t0, t1{GaussRat(1)};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    CPoly s = s0 - q * s1;
    CPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {CPoly(), CPoly(), CPoly()};
  const CPoly unit{r0.leading().inverse()};
  return {r0 * unit, s0 * unit, t0 * unit};
}

Bezout bezout_multi(const std::vector<CPoly>& ps) {
  const std::size_t n = ps.size();
  // Fold from the right: g_k = gcd(p_k, g_{k+1}) = s_k p_k + t_k g_{k+1}.
  std::size_t last = n;
  while (last > 0 && ps[last - 1].is_zero()) --last;
  if (last == 0) throw std::invalid_argument("bezout_multi: all polynomials are zero");

  std::vector<CPoly> witnesses(n);
  CPoly g = monic(ps[last - 1]);
  witnesses[last - 1] = CPoly{ps[last - 1].leading().inverse()};
  // carry * g = sum_{k >= current} witnesses[k] * ps[k]
  for (std::size_t k = last - 1; k-- > 0;) {
    if (ps[k].is_zero()) continue;
    auto e = extended_gcd(ps[k], g);
    // new_g = s p_k + t g; multiply the existing witnesses by t.
    for (std::size_t m = k + 1; m < last; ++m) witnesses[m] = e.t * witnesses[m];
    witnesses[k] = e.s;
    g = std::move(e.gcd);
  }

  CPoly check;
  for (std::size_t m = 0; m < n; ++m) check += witnesses[m] * ps[m];
  if (!(check == g)) throw InternalInconsistency("bezout_multi: identity check failed");
  return {std::move(g), std::move(witnesses)};
}

CPoly squarefree_part(const CPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
  const CPoly g = gcd(a, derivative(a));
  return monic(divmod(a, g).quotient);
}

std::string to_string(const CPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int m = a.degree(); m >= 0; --m) {
    const GaussRat& c = a.coeffs()[m];
    if (c.is_zero()) continue;
    std::string mono = m == 0 ? "" : (m == 1 ? var : var + "^" + std::to_string(m));
    std::string cs = to_string(c);
    bool compound = !c.is_real() && sgn(c.re) != 0;
    bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + mono;
    }
  }
  return out;
}

}  // namespace qcorona
