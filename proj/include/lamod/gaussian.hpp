#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace lamod {

/// Exact element a + b*i of Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long value) : re_(value) {}
  Gaussian(mpq_class re, mpq_class im = 0);

  static Gaussian i() { return Gaussian(0, 1); }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  /// |z|^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Renders in the expression grammar: "3/4", "-2*I", "(1/2-I)".
  std::string to_string() const;
  /// True when to_string() needs no parentheses inside a product.
  bool is_atomic() const { return sgn(re_) == 0 || sgn(im_) == 0; }

 private:
  mpq_class re_;
  mpq_class im_;
};

inline std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.to_string(); }

}  // namespace lamod
