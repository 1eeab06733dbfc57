#include "stabdiv/coeff.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <mpfr.h>

#include "stabdiv/errors.hpp"

namespace stabdiv {

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
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational denom = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(denom) == 0) throw ZeroPolynomialError("division by zero Gaussian rational");
  Rational re = (re_ * o.re_ + im_ * o.im_) / denom;
  Rational im = (im_ * o.re_ - re_ * o.im_) / denom;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

double to_double(const Rational& q) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  // mpfr's exponent range is wider than double's; this rounds subnormals and
  // maps overflow to +-inf.
  const double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  if (std::isinf(out)) throw OverflowError("rational " + q.get_str() + " overflows double");
  return out;
}

Complex to_complex(const Rational& q) { return {to_double(q), 0.0}; }

Complex to_complex(const GaussianRational& q) { return {to_double(q.real()), to_double(q.imag())}; }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussianRational& q) {
  if (sgn(q.imag()) == 0) return q.real().get_str();
  std::string im = q.imag().get_str() + "i";
  if (sgn(q.real()) == 0) return im;
  return "(" + q.real().get_str() + (sgn(q.imag()) > 0 ? "+" : "") + im + ")";
}

std::string format_double(double x) {
  if (x == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

std::string to_string(const Complex& c) {
  if (c.imag() == 0.0) return format_double(c.real());
  std::string im = format_double(c.imag()) + "i";
  if (c.real() == 0.0) return im;
  return "(" + format_double(c.real()) + (c.imag() > 0 ? "+" : "") + im + ")";
}

}  // namespace stabdiv
