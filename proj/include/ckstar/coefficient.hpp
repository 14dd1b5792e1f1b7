#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ckstar {

using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(long num, long den = 1);

/// Formats as "p/q" with q >= 1, always including the denominator.
std::string format_rational(const Rational& value);

/// Accepts "p", "p/q", "-p/q". Throws Error(parse_error) otherwise.
Rational parse_rational(std::string_view text);

/// Exact Gaussian rational re + i*im.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Coefficient(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Coefficient imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// re^2 + im^2.
  Rational norm_squared() const;
  bool is_unimodular() const { return norm_squared() == 1; }

  Coefficient conj() const { return {re_, Rational(-im_)}; }

  Coefficient operator-() const { return {Rational(-re_), Rational(-im_)}; }
  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);

  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }
  friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) { return lhs -= rhs; }
  friend Coefficient operator*(Coefficient lhs, const Coefficient& rhs) { return lhs *= rhs; }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// z^power for z a primitive n-th root of unity, n in {1, 2, 4}.
  static Coefficient root_of_unity(int order, long long power);

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace ckstar
