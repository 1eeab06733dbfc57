#pragma once

// Coefficient domains: exact rationals, Gaussian rationals and complex doubles.

#include <complex>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace stabdiv {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

template <class K>
inline constexpr bool is_exact_v = std::is_same_v<K, Rational> || std::is_same_v<K, GaussianRational>;

template <class K>
concept Coefficient = std::is_same_v<K, Rational> || std::is_same_v<K, GaussianRational> ||
                      std::is_same_v<K, Complex>;

/// Type of |c|^2 and of H^2 norms: exact for the exact domains.
template <class K>
struct norm_type {
  using type = Rational;
};
template <>
struct norm_type<Complex> {
  using type = double;
};
template <class K>
using norm_type_t = typename norm_type<K>::type;

inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const GaussianRational& c) {
  return sgn(c.real()) == 0 && sgn(c.imag()) == 0;
}
inline bool coeff_is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }

inline Rational coeff_conj(const Rational& c) { return c; }
inline GaussianRational coeff_conj(const GaussianRational& c) { return {c.real(), -c.imag()}; }
inline Complex coeff_conj(const Complex& c) { return std::conj(c); }

inline Rational coeff_abs_sq(const Rational& c) { return Rational(c * c); }
inline Rational coeff_abs_sq(const GaussianRational& c) {
  return Rational(c.real() * c.real() + c.imag() * c.imag());
}
inline double coeff_abs_sq(const Complex& c) { return std::norm(c); }

/// Nearest double (round-half-even). Throws OverflowError when |q| exceeds
/// the finite double range.
double to_double(const Rational& q);

inline double to_double(double x) { return x; }

Complex to_complex(const Rational& q);
Complex to_complex(const GaussianRational& q);
inline Complex to_complex(const Complex& c) { return c; }

/// Converts a coefficient of one domain to another domain where that is
/// lossless or explicitly requested (exact -> float).
template <class To, class From>
To coeff_cast(const From& c) {
  if constexpr (std::is_same_v<To, From>) {
    return c;
  } else if constexpr (std::is_same_v<To, Complex>) {
    return to_complex(c);
  } else if constexpr (std::is_same_v<To, GaussianRational> && std::is_same_v<From, Rational>) {
    return GaussianRational(c);
  } else {
    static_assert(std::is_same_v<To, From>, "no lossless coefficient conversion");
  }
}

std::string to_string(const Rational& q);
std::string to_string(const GaussianRational& q);
std::string to_string(const Complex& c);

/// Shortest representation that reads back to the same double.
std::string format_double(double x);

}  // namespace stabdiv
