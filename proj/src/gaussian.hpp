#pragma once

#include <complex>
#include <string>

#include "rational.hpp"

namespace twk {

// Element of Q(i): re + im*i with exact rational components. This is the
// scalar every certified computation runs over.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational from_int(long n) { return {Rational(n), Rational(0)}; }
  static GaussianRational from_parts(long re_num, long re_den, long im_num = 0, long im_den = 1) {
    return {rational_from_parts(re_num, re_den), rational_from_parts(im_num, im_den)};
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  // |z|^2 as an exact rational.
  Rational norm_sq() const { return re * re + im * im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }

  GaussianRational inverse() const {
    if (is_zero()) throw invalid_input("division by zero GaussianRational");
    Rational n = norm_sq();
    return {re / n, -im / n};
  }

  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
};

// Total order used only for canonical sorting: (re, im) lexicographic.
inline int gr_compare(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c;
  return cmp(a.im, b.im);
}

inline std::string gr_to_debug_string(const GaussianRational& z) {
  return z.re.get_str() + (sgn(z.im) >= 0 ? "+" : "") + z.im.get_str() + "i";
}

}  // namespace twk
