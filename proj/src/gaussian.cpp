#include "lamod/gaussian.hpp"

#include "lamod/error.hpp"

namespace lamod {

Gaussian::Gaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string Gaussian::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag_part;
  if (im_ == 1) {
    imag_part = "I";
  } else if (im_ == -1) {
    imag_part = "-I";
  } else {
    imag_part = im_.get_str() + "*I";
  }
  if (sgn(re_) == 0) return imag_part;
  std::string out = "(" + re_.get_str();
  if (imag_part.front() != '-') out += "+";
  return out + imag_part + ")";
}

}  // namespace lamod
