#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotinv/scalar.hpp"

namespace knotinv {

// Exponent on the half-integer lattice, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt integer(int v) { return HalfInt(2 * v); }
  static constexpr HalfInt halves(int twice) { return HalfInt(twice); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Precondition: is_integer().
  constexpr int as_integer() const { return twice_ / 2; }
  Scalar as_scalar() const { return Scalar::rational(twice_, 2); }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string to_string() const;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

// One-variable Laurent polynomial with half-integer exponents.
class LaurentPoly {
 public:
  using Terms = std::map<HalfInt, Scalar>;

  explicit LaurentPoly(std::string var = "t") : var_(std::move(var)) {}
  static LaurentPoly constant(const Scalar& c, std::string var = "t");
  static LaurentPoly monomial(std::string var, const Scalar& c, HalfInt e);
  // t^{1/2} - t^{-1/2}
  static LaurentPoly half_difference(std::string var);

  const std::string& var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Scalar coeff(HalfInt e) const;
  std::optional<HalfInt> min_exponent() const;
  std::optional<HalfInt> max_exponent() const;

  void add_term(HalfInt e, const Scalar& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& c) { return a *= c; }
  friend LaurentPoly operator*(const Scalar& c, LaurentPoly a) { return a *= c; }

  LaurentPoly pow(unsigned e) const;
  // Multiplies by var^e.
  LaurentPoly shifted(HalfInt e) const;

  // Same variable and identical term maps. Constants compare equal across
  // variable names.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::string var_;
  Terms terms_;
};

// Two-variable Laurent polynomial, exponents ordered (first, second).
class LaurentPoly2 {
 public:
  using Exponent = std::pair<HalfInt, HalfInt>;
  using Terms = std::map<Exponent, Scalar>;

  LaurentPoly2(std::string var1 = "a", std::string var2 = "z")
      : vars_{std::move(var1), std::move(var2)} {}

  const std::string& var(int i) const { return vars_[i]; }
  int index_of(std::string_view var) const;  // throws UnknownVariable
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(HalfInt e1, HalfInt e2) const;

  void add_term(HalfInt e1, HalfInt e2, const Scalar& c);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const Scalar& c);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend LaurentPoly2 operator*(LaurentPoly2 a, const Scalar& c) { return a *= c; }

  LaurentPoly2 pow(unsigned e) const;

  // Coefficient of var^e viewed as a polynomial in the other variable.
  LaurentPoly coefficient_of(std::string_view var, HalfInt e) const;

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
    return a.vars_[0] == b.vars_[0] && a.vars_[1] == b.vars_[1] && a.terms_ == b.terms_;
  }

 private:
  std::string vars_[2];
  Terms terms_;
};

LaurentPoly derivative(const LaurentPoly& p, std::string_view var, unsigned order);
LaurentPoly2 derivative(const LaurentPoly2& p, std::string_view var, unsigned order);

struct EvalOptions {
  double tol = kDefaultTolerance;
};

// x^e for a half-integer e. Exact for exact x and integral e, and for exact
// x that is a nonnegative rational square; approximate (principal branch)
// otherwise. Raises PoleAtZero for zero with negative e and BranchUndefined
// for an exact negative real with non-integral e.
Scalar power(const Scalar& x, HalfInt e);

Scalar evaluate(const LaurentPoly& p, const Scalar& x);
Scalar evaluate(const LaurentPoly2& p, const Scalar& x, const Scalar& y);
Scalar evaluate(const LaurentPoly2& p, const std::map<std::string, Scalar>& point);

// Exact division; raises InexactDivision when the remainder is nonzero.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Replaces both variables of p by one-variable Laurent polynomials in a
// common variable. Images that are not monomials may only be raised to
// integral powers; negative powers of them are cleared and divided out
// exactly at the end.
LaurentPoly substitute(const LaurentPoly2& p, const LaurentPoly& image1, const LaurentPoly& image2);

// Taylor coefficients of f(g(x)) at x = a up to order n, given the Taylor
// coefficients g_k = g^{(k)}(a)/k! for k = 0..n.
std::vector<Scalar> series_compose(const LaurentPoly& f, const std::vector<Scalar>& g, unsigned n);

// p(x + s)
LaurentPoly shift_argument(const LaurentPoly& p, const Scalar& s);

// Canonical text: terms in ascending exponent order joined by " + ", each
// printed as coefficient followed by "*var^e" factors for nonzero exponents.
std::string to_string(const LaurentPoly& p);
std::string to_string(const LaurentPoly2& p);

// Exponent text used by the canonical form: "3", "-4", "(1/2)", "(-3/2)".
std::string exponent_text(HalfInt e);

}  // namespace knotinv
