#include "eigsphere/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "eigsphere/error.hpp"

namespace eigsphere {

namespace {

void require_same_nvars(const Polynomial& p, const Polynomial& q, const char* op) {
  if (p.nvars() != q.nvars()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": " + std::to_string(p.nvars()) + " vs " +
                    std::to_string(q.nvars()) + " variables");
  }
}

// Repeated multiplication; shared by Polynomial::evaluate and
// CompiledPolynomial so both produce identical bits.
inline double ipow(double x, std::uint32_t e) {
  double r = 1.0;
  for (std::uint32_t k = 0; k < e; ++k) r *= x;
  return r;
}

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps_.at(index) = 1;
  return m;
}

std::uint32_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw Error(ErrorKind::InvalidArgument, "polynomial needs at least one variable");
}

Polynomial::Polynomial(std::size_t nvars, Terms terms) : Polynomial(nvars) {
  for (auto& [m, c] : terms) {
    if (m.nvars() != nvars) {
      throw Error(ErrorKind::DimensionMismatch, "monomial length differs from nvars");
    }
    if (!c.is_zero()) terms_.emplace(m, c);
  }
}

Polynomial Polynomial::constant(std::size_t nvars, const GaussianRational& c) {
  return monomial(Monomial(nvars), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) {
    throw Error(ErrorKind::IndexOutOfRange, "variable x" + std::to_string(index + 1));
  }
  return monomial(Monomial::variable(nvars, index), 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const GaussianRational& c) {
  Polynomial p(m.nvars());
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

Polynomial Polynomial::r_squared(std::size_t nvars) {
  Polynomial p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    Monomial m(nvars);
    m[i] = 2;
    p.terms_.emplace(std::move(m), 1);
  }
  return p;
}

bool Polynomial::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_real(); });
}

std::uint32_t Polynomial::total_degree() const {
  if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return terms_.begin()->first.degree();
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  require_same_nvars(*this, q, "add");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  require_same_nvars(*this, q, "sub");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  Polynomial r(p);
  r += q;
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  Polynomial r(p);
  r -= q;
  return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_nvars(p, q, "mul");
  Polynomial r(p.nvars());
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
  }
  return r;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
  Polynomial r(p.nvars());
  if (c.is_zero()) return r;
  for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
  return r;
}

Polynomial Polynomial::conj() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = c.conj();
  return r;
}

std::complex<double> Polynomial::evaluate(std::span<const double> x) const {
  if (x.size() != nvars_) {
    throw Error(ErrorKind::DimensionMismatch,
                "point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                    std::to_string(nvars_) + " variables");
  }
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    double v = 1.0;
    for (std::size_t i = 0; i < nvars_; ++i) v *= ipow(x[i], m[i]);
    sum += c.to_complex() * v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool constant_term = m.degree() == 0;
    bool negative = false;
    GaussianRational mag = c;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      mag = -c;
    } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
      negative = true;
      mag = -c;
    }
    std::string body;
    if (constant_term) {
      body = mag.to_string();
    } else if (mag == GaussianRational(1)) {
      body = monomial_text(m);
    } else {
      body = mag.to_string() + "*" + monomial_text(m);
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::optional<std::uint32_t> homogeneity(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "homogeneity of the zero polynomial");
  const std::uint32_t k = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != k) return std::nullopt;
  }
  return k;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZeroPolynomial, "exact_divide by 0");
  require_same_nvars(p, d, "exact_divide");
  const auto& [lead_m, lead_c] = *d.terms().begin();
  Polynomial rest = p;
  Polynomial quotient(p.nvars());
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().begin();
    // If d*q = rest then LT(rest) = LT(d)*LT(q); a non-divisible leading
    // term means the remainder is nonzero.
    if (!lead_m.divides(m)) return std::nullopt;
    Polynomial t = Polynomial::monomial(m / lead_m, c / lead_c);
    rest -= t * d;
    quotient += t;
  }
  return quotient;
}

std::complex<double> evaluate(const Polynomial& p, std::span<const double> x) {
  return p.evaluate(x);
}

std::pair<Polynomial, Polynomial> real_imag_parts(const Polynomial& p) {
  Polynomial::Terms re;
  Polynomial::Terms im;
  for (const auto& [m, c] : p.terms()) {
    if (sgn(c.re()) != 0) re.emplace(m, GaussianRational(c.re()));
    if (sgn(c.im()) != 0) im.emplace(m, GaussianRational(c.im()));
  }
  return {Polynomial(p.nvars(), std::move(re)), Polynomial(p.nvars(), std::move(im))};
}

std::string render(const Polynomial& p) { return p.to_string(); }

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  // Descending lex enumeration: exhaust x1 first.
  auto rec = [&](auto& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) : nvars_(p.nvars()) {
  exps_.reserve(p.size() * nvars_);
  coeffs_.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      exps_.push_back(m[i]);
      max_exp_ = std::max(max_exp_, m[i]);
    }
    coeffs_.push_back(c.to_complex());
  }
}

std::complex<double> CompiledPolynomial::operator()(std::span<const double> x) const {
  std::complex<double> sum{0.0, 0.0};
  const std::uint32_t* e = exps_.data();
  for (const auto& c : coeffs_) {
    double v = 1.0;
    for (std::size_t i = 0; i < nvars_; ++i) v *= ipow(x[i], e[i]);
    e += nvars_;
    sum += c * v;
  }
  return sum;
}

double CompiledPolynomial::real(std::span<const double> x) const { return (*this)(x).real(); }

}  // namespace eigsphere
