#include "eigsphere/gaussian_rational.hpp"

#include "eigsphere/error.hpp"

namespace eigsphere {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::SphereDimensionTooSmall: return "SphereDimensionTooSmall";
    case ErrorKind::MixedDegrees: return "MixedDegrees";
    case ErrorKind::NotAnEigenfunction: return "NotAnEigenfunction";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::InsufficientYield: return "InsufficientYield";
    case ErrorKind::OffVariety: return "OffVariety";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::PoleSingularity: return "PoleSingularity";
    case ErrorKind::IOError: return "IOError";
    case ErrorKind::ZeroLine: return "ZeroLine";
    case ErrorKind::EmptyFiber: return "EmptyFiber";
    case ErrorKind::SingularFiber: return "SingularFiber";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

GaussianRational::GaussianRational(Rational re, Rational im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) {
    throw Error(ErrorKind::DivisionByZeroPolynomial, "division by zero coefficient");
  }
  const Rational n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return rational_to_string(re_);
  auto imag_text = [](const Rational& v, bool leading) {
    std::string out;
    Rational a = abs(v);
    if (sgn(v) < 0) out = "-";
    else if (!leading) out = "+";
    if (a != 1) out += rational_to_string(a) + "*";
    return out + "i";
  };
  if (!has_re) return imag_text(im_, true);
  return "(" + rational_to_string(re_) + imag_text(im_, false) + ")";
}

}  // namespace eigsphere
