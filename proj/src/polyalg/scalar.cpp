#include "knotinv/scalar.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "knotinv/error.hpp"

namespace knotinv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedPD: return "MalformedPD";
    case ErrorKind::InvalidPD: return "InvalidPD";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotADoublePoint: return "NotADoublePoint";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::BranchUndefined: return "BranchUndefined";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::IncompleteGrid: return "IncompleteGrid";
    case ErrorKind::TooFewValues: return "TooFewValues";
    case ErrorKind::DiagramTooLarge: return "DiagramTooLarge";
    case ErrorKind::GridBudgetExceeded: return "GridBudgetExceeded";
    case ErrorKind::DegenerateG: return "DegenerateG";
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::MalformedEntry: return "MalformedEntry";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownKnot: return "UnknownKnot";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

namespace {

std::complex<double> to_complex(const GaussianRational& g) {
  return {g.re.get_d(), g.im.get_d()};
}

GaussianRational mul(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

Scalar::Scalar(const mpq_class& re, const mpq_class& im) : value_(GaussianRational{re, im}) {
  auto& g = std::get<GaussianRational>(value_);
  g.re.canonicalize();
  g.im.canonicalize();
}

Scalar::Scalar(GaussianRational g) : value_(std::move(g)) {}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::PoleAtZero, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

Scalar Scalar::approx(std::complex<double> z) {
  Scalar s;
  s.value_ = z;
  return s;
}

std::complex<double> Scalar::to_complex() const {
  if (is_exact()) return knotinv::to_complex(exact());
  return std::get<std::complex<double>>(value_);
}

bool Scalar::is_zero(double tol) const {
  if (is_exact()) return exact().is_zero();
  return std::abs(std::get<std::complex<double>>(value_)) <= tol;
}

bool Scalar::is_real() const {
  if (is_exact()) return sgn(exact().im) == 0;
  return std::get<std::complex<double>>(value_).imag() == 0.0;
}

bool Scalar::is_integer() const {
  return is_exact() && sgn(exact().im) == 0 && exact().re.get_den() == 1;
}

bool Scalar::is_negative_real() const {
  return is_exact() && sgn(exact().im) == 0 && sgn(exact().re) < 0;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(GaussianRational{-exact().re, -exact().im});
  return approx(-std::get<std::complex<double>>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    auto& g = std::get<GaussianRational>(value_);
    g.re += o.exact().re;
    g.im += o.exact().im;
  } else {
    value_ = to_complex() + o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    auto& g = std::get<GaussianRational>(value_);
    g.re -= o.exact().re;
    g.im -= o.exact().im;
  } else {
    value_ = to_complex() - o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    value_ = mul(exact(), o.exact());
  } else {
    value_ = to_complex() * o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_exact() && o.exact().is_zero())
    throw Error(ErrorKind::PoleAtZero, "division by exact zero");
  if (is_exact() && o.is_exact()) {
    const auto& b = o.exact();
    mpq_class norm = b.re * b.re + b.im * b.im;
    GaussianRational conj{b.re / norm, -b.im / norm};
    value_ = mul(exact(), conj);
  } else {
    auto d = o.to_complex();
    if (d == std::complex<double>(0.0, 0.0))
      throw Error(ErrorKind::PoleAtZero, "division by zero");
    value_ = to_complex() / d;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.to_complex() == b.to_complex();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) {
    if (is_zero(0.0)) throw Error(ErrorKind::PoleAtZero, "negative power of zero");
    return Scalar(1) / pow(-e);
  }
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
  if (is_exact()) {
    const auto& g = exact();
    if (sgn(g.im) == 0) return rational_to_string(g.re);
    if (sgn(g.re) == 0) return rational_to_string(g.im) + "*I";
    std::string s = "(" + rational_to_string(g.re);
    s += sgn(g.im) < 0 ? "-" : "+";
    s += rational_to_string(mpq_class(::abs(g.im))) + "*I)";
    return s;
  }
  auto z = to_complex();
  if (z.imag() == 0.0) return format_double(z.real());
  if (z.real() == 0.0) return format_double(z.imag()) + "*I";
  std::string s = "(" + format_double(z.real());
  s += std::signbit(z.imag()) ? "-" : "+";
  s += format_double(std::abs(z.imag())) + "*I)";
  return s;
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

Scalar principal_sqrt(const Scalar& x) {
  if (x.is_exact() && x.is_real() && sgn(x.exact().re) >= 0) {
    const mpq_class& q = x.exact().re;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      return Scalar(mpq_class(rn, rd));
    }
  }
  return Scalar::approx(std::sqrt(x.to_complex()));
}

}  // namespace knotinv
