#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eigsphere/gaussian_rational.hpp"

namespace eigsphere {

/// Exponent vector of a monomial in N real variables x1..xN.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  std::uint32_t degree() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o, *this).
  Monomial operator/(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order with x1 > x2 > ... > xN. The comparator is
/// "greater than" so that map iteration starts at the leading term.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over the Gaussian rationals in N real variables.
///
/// Canonical form: no zero coefficients, terms ordered by GrlexDescending.
/// Values are immutable from the outside; all operations return new values.
class Polynomial {
 public:
  using Terms = std::map<Monomial, GaussianRational, GrlexDescending>;

  explicit Polynomial(std::size_t nvars);
  Polynomial(std::size_t nvars, Terms terms);

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, const GaussianRational& c);
  /// x_{index+1}; index is 0-based.
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const GaussianRational& c);
  /// r^2 = x1^2 + ... + xN^2.
  static Polynomial r_squared(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  /// Highest total degree; throws ZeroPolynomial on 0.
  std::uint32_t total_degree() const;
  /// Coefficient of m (zero when absent).
  GaussianRational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Coefficient-wise complex conjugate (variables are real).
  Polynomial conj() const;

  std::complex<double> evaluate(std::span<const double> x) const;

  /// Canonical text, parseable by parse(text, nvars()).
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const GaussianRational& c);

  std::size_t nvars_;
  Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned k);

/// Common total degree of all terms, or nullopt if degrees are mixed.
/// Throws ZeroPolynomial for p = 0.
std::optional<std::uint32_t> homogeneity(const Polynomial& p);

/// q with p = d*q exactly, or nullopt. Single-divisor division in grlex
/// order; throws DivisionByZeroPolynomial for d = 0.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

/// Direct term-by-term evaluation in canonical term order. Throws
/// DimensionMismatch when x.size() != p.nvars().
std::complex<double> evaluate(const Polynomial& p, std::span<const double> x);

/// (Re p, Im p) as real-coefficient polynomials, p = re + i*im.
std::pair<Polynomial, Polynomial> real_imag_parts(const Polynomial& p);

std::string render(const Polynomial& p);

/// All degree-d monomials in nvars variables, in canonical (descending
/// grlex) order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Floating-point image of a polynomial for repeated evaluation. Keeps the
/// canonical term order so results match Polynomial::evaluate bit for bit.
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(const Polynomial& p);

  std::size_t nvars() const { return nvars_; }
  std::complex<double> operator()(std::span<const double> x) const;
  /// Real part only; for real-coefficient polynomials.
  double real(std::span<const double> x) const;

 private:
  std::size_t nvars_ = 0;
  std::uint32_t max_exp_ = 0;
  std::vector<std::uint32_t> exps_;  // row-major, nterms x nvars
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace eigsphere
