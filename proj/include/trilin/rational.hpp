#ifndef TRILIN_RATIONAL_HPP
#define TRILIN_RATIONAL_HPP

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <utility>

namespace trilin {

/// Exact complex rational a + b*i with arbitrary-precision components.
/// All algebra in the symbolic layer runs on this type; no floating point.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  /// num/den constructor; canonicalizes (mpq_class(n,d) alone does not).
  static GaussianRational make(long num_re, long den_re, long num_im = 0, long den_im = 1) {
    mpq_class r(num_re, den_re), i(num_im, den_im);
    r.canonicalize();
    i.canonicalize();
    return {r, i};
  }
  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_imaginary() const { return re_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator*=(const mpq_class& q) {
    re_ *= q;
    im_ *= q;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator*(GaussianRational a, const mpq_class& q) { return a *= q; }
  friend GaussianRational operator*(const mpq_class& q, GaussianRational a) { return a *= q; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re_ != 0) s += re_.get_str();
    if (im_ != 0) {
      if (!s.empty() && im_ > 0) s += "+";
      s += im_.get_str() + "i";
    }
    return s;
  }

 private:
  mpq_class re_, im_;
};

}  // namespace trilin

#endif
