#pragma once

#include <gmpxx.h>

#include <string>

#include "bicross/errors.hpp"

namespace bicross {

using Rational = mpq_class;

/// Make a canonical rational n/d. mpq_class(n, d) does not canonicalize on
/// its own, so all fraction construction should go through here.
inline Rational rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Gaussian rational a + b*i. All arithmetic is exact and equality is
/// decidable, which is what makes the operator-level identity checks
/// (pentagon, coassociativity, invariance) meaningful as equalities rather
/// than tolerance comparisons.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  Scalar(Rational re) : re_(std::move(re)), im_(0) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    if (n == 0) throw DomainError("Scalar: division by zero");
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "0", "1", "-2/3", "i", "1/2-3i", ...
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::string rational_str(const Rational& q);

}  // namespace bicross
