#include "eigsphere/calculus.hpp"

#include "eigsphere/error.hpp"

namespace eigsphere {

Polynomial PolyMatrix::trace() const {
  Polynomial t(n_);
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Polynomial partial(const Polynomial& p, std::size_t i) {
  if (i >= p.nvars()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "partial derivative in x" + std::to_string(i + 1) + " of a polynomial in " +
                    std::to_string(p.nvars()) + " variables");
  }
  Polynomial::Terms out;
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[i];
    if (e == 0) continue;
    Monomial d = m;
    d[i] = e - 1;
    out.emplace(std::move(d), GaussianRational(static_cast<long>(e)) * c);
  }
  return Polynomial(p.nvars(), std::move(out));
}

PolyVector gradient(const Polynomial& p) {
  PolyVector g;
  g.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(partial(p, i));
  return g;
}

PolyMatrix hessian(const Polynomial& p) {
  const std::size_t n = p.nvars();
  PolyMatrix h(n);
  const PolyVector g = gradient(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = partial(g[i], j);
      if (j != i) h(j, i) = h(i, j);
    }
  }
  return h;
}

Polynomial laplacian(const Polynomial& p) {
  Polynomial acc(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      const auto e = m[i];
      if (e < 2) continue;
      Monomial d = m;
      d[i] = e - 2;
      acc += Polynomial::monomial(d, GaussianRational(static_cast<long>(e) * (e - 1)) * c);
    }
  }
  return acc;
}

Polynomial kappa(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "kappa of polynomials in different variable counts");
  }
  Polynomial acc(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) acc += partial(p, i) * partial(q, i);
  return acc;
}

Polynomial hess_grad_grad(const Polynomial& p) {
  const std::size_t n = p.nvars();
  const PolyVector g = gradient(p);
  Polynomial acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i].is_zero()) continue;
    for (std::size_t j = i; j < n; ++j) {
      if (g[j].is_zero()) continue;
      Polynomial h = partial(g[i], j);
      if (h.is_zero()) continue;
      Polynomial term = h * g[i] * g[j];
      acc += (i == j) ? term : GaussianRational(2) * term;
    }
  }
  return acc;
}

Polynomial euler(const Polynomial& p) {
  Polynomial acc(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    acc += Polynomial::variable(p.nvars(), i) * partial(p, i);
  }
  return acc;
}

bool r2_coprime(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "r2_coprime of the zero polynomial");
  return !exact_divide(p, Polynomial::r_squared(p.nvars())).has_value();
}

bool identity_one_check(const Polynomial& phi, const Polynomial& psi) {
  if (phi.nvars() != psi.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "identity check on different variable counts");
  }
  const Polynomial lhs = laplacian(phi * psi);
  const Polynomial rhs =
      laplacian(phi) * psi + GaussianRational(2) * kappa(phi, psi) + phi * laplacian(psi);
  return (lhs - rhs).is_zero();
}

}  // namespace eigsphere
