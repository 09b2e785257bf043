#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace hermex {

/// Exact complex number with arbitrary-precision rational real and imaginary
/// parts (a Gaussian rational). Both parts are kept canonical: lowest terms,
/// positive denominator.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Gaussian(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gaussian ratio(long num, long den) { return Gaussian(mpq_class(num, den)); }
  static Gaussian imag_unit() { return Gaussian(mpq_class(0), mpq_class(1)); }

  /// Parses "a", "a/b", "a/b+c/di", "-c/di", "i" and friends.
  static Gaussian parse(std::string_view text);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  Gaussian operator-() const { return Gaussian(-re_, -im_); }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form, e.g. "3", "-1/2", "1/2+3/4i", "-2i".
  std::string str() const;

  double real_double() const { return re_.get_d(); }
  double imag_double() const { return im_.get_d(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

}  // namespace hermex
