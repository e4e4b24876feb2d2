#pragma once

// Dense univariate polynomials sum_m X^m c_m over a (possibly noncommutative)
// coefficient ring. Powers of the variable sit on the left of the coefficient,
// and the product is the Cauchy convolution c_n = sum_m a_m b_{n-m}, which for
// quaternion coefficients is the regular (star) product.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qcorona {

template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  /// Constant polynomial.
  explicit Poly(T constant) {
    c_.push_back(std::move(constant));
    trim();
  }

  /// c X^degree
  static Poly monomial(T c, std::size_t degree) {
    std::vector<T> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(T(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }
  std::span<const T> coeffs() const { return c_; }

  /// Coefficient of X^m; zero beyond the degree.
  T coeff(std::size_t m) const { return m < c_.size() ? c_[m] : T(); }
  const T& leading() const { return c_.back(); }

  /// Applies fn to every coefficient.
  template <class Fn>
  Poly map(Fn&& fn) const {
    std::vector<T> out;
    out.reserve(c_.size());
    for (const T& c : c_) out.push_back(fn(c));
    return Poly(std::move(out));
  }

  /// Horner evaluation sum_m x^m c_m with x multiplied from the left.
  template <class X>
  X eval(const X& x) const {
    X acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = X(*it) + x * acc;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t m = 0; m < o.c_.size(); ++m) c_[m] += o.c_[m];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t m = 0; m < o.c_.size(); ++m) c_[m] -= o.c_[m];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    return a.map([](const T& c) { return -c; });
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t m = 0; m < a.c_.size(); ++m) {
      if (a.c_[m] == T()) continue;
      for (std::size_t l = 0; l < b.c_.size(); ++l) out[m + l] += a.c_[m] * b.c_[l];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// s * p and p * s: coefficientwise, on the stated side.
  friend Poly scale_left(const T& s, const Poly& p) {
    return p.map([&](const T& c) { return s * c; });
  }
  friend Poly scale_right(const Poly& p, const T& s) {
    return p.map([&](const T& c) { return c * s; });
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T()) c_.pop_back();
  }

  std::vector<T> c_;
};

}  // namespace qcorona
