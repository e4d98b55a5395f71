#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace knotinv {

inline constexpr double kDefaultTolerance = 1e-9;

// Exact element of Q(i).
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
};

// Either an exact Gaussian rational or an approximate complex number.
// Arithmetic stays exact until an approximate operand shows up.
class Scalar {
 public:
  Scalar() : value_(GaussianRational{}) {}
  Scalar(long v) : value_(GaussianRational{mpq_class(v), mpq_class(0)}) {}  // NOLINT
  Scalar(int v) : Scalar(static_cast<long>(v)) {}                            // NOLINT
  Scalar(const mpq_class& re, const mpq_class& im = 0);                       // NOLINT
  explicit Scalar(GaussianRational g);

  static Scalar rational(long num, long den);
  static Scalar imaginary_unit();
  static Scalar approx(std::complex<double> z);

  bool is_exact() const { return std::holds_alternative<GaussianRational>(value_); }
  // Precondition: is_exact().
  const GaussianRational& exact() const { return std::get<GaussianRational>(value_); }
  std::complex<double> to_complex() const;

  bool is_zero(double tol = kDefaultTolerance) const;
  bool is_real() const;  // exact: im == 0; approximate: im == 0.0
  bool is_integer() const;
  // Exact and strictly negative real.
  bool is_negative_real() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Structural equality: exact values compare exactly, approximate values
  // compare bitwise, and exact never equals approximate.
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(long e) const;
  double abs() const { return std::abs(to_complex()); }

  // "3", "-1/2", "2*I", "(1/2-3*I)"; approximate values use 17 significant digits.
  std::string to_string() const;

 private:
  std::variant<GaussianRational, std::complex<double>> value_;
};

// |a - b| <= tol, or exact equality when both are exact.
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance);

// Principal square root. Exact when the argument is a nonnegative rational
// square, approximate otherwise.
Scalar principal_sqrt(const Scalar& x);

std::string rational_to_string(const mpq_class& q);

}  // namespace knotinv
