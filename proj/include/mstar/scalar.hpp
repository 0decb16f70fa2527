#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mstar {

/// Exact element of Q(i). Conjugation is what makes the involution on
/// linear hom-spaces anti-linear.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long re) : re_(re) {}  // NOLINT: implicit from integers is convenient
  Gaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gaussian i() { return {mpq_class(0), mpq_class(1)}; }
  /// Parses "a/b+c/d*i" and the usual shorthands ("i", "-3/4*i", "2-i").
  static Gaussian parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  Gaussian conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using Vec = std::vector<Gaussian>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t k);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scale(const Gaussian& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Gaussian& c, const Vec& b);
std::string to_string(const Vec& v);
/// Stable text key used for hashing vectors in lookup tables.
std::string key_of(const Vec& v);

}  // namespace mstar
