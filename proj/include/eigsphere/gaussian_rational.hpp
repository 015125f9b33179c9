#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace eigsphere {

using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
///
/// Both parts are kept canonical (reduced, positive denominators), so
/// equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws Error(DivisionByZeroPolynomial) on a zero divisor.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Text accepted by the polynomial parser: "3", "-1/2", "i", "-2*i",
  /// "(1/2+3*i)".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Canonical text of a rational: "p" or "p/q".
std::string rational_to_string(const Rational& q);

}  // namespace eigsphere
