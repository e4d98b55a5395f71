#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "knotinv/scalar.hpp"

namespace knotinv {

// Parsed name of a numerical knot invariant.
//
//   conway_coeff(k)                coefficient of z^k in the Conway polynomial
//   jones_deriv(n; t0)             n-th derivative of J at t0
//   alexander_deriv(n; t0)         n-th derivative of the Alexander polynomial
//   conway_deriv(n; z0)            n-th derivative of the Conway polynomial
//   q_deriv(n; x0)                 n-th derivative of Q at x0
//   homfly_deriv(m, n; a0, z0)     d^m/da^m d^n/dz^n P at (a0, z0)
//   homfly_coeff_deriv(p, l; a0)   l-th a-derivative of the z^p coefficient of P
//   kauffman_coeff_deriv(k, l; a0) l-th a-derivative of the x^k coefficient of F
//
// plus constants, sums, products and scale(c, v).
class Descriptor {
 public:
  enum class Kind {
    Const,
    ConwayCoeff,
    JonesDeriv,
    AlexanderDeriv,
    ConwayDeriv,
    QDeriv,
    HomflyDeriv,
    HomflyCoeffDeriv,
    KauffmanCoeffDeriv,
    Sum,
    Product,
    Scale,
  };
  using Ptr = std::shared_ptr<const Descriptor>;

  static Ptr constant(const Scalar& c);
  static Ptr conway_coeff(int k);
  static Ptr jones_deriv(int n, const Scalar& t0);
  static Ptr alexander_deriv(int n, const Scalar& t0);
  static Ptr conway_deriv(int n, const Scalar& z0);
  static Ptr q_deriv(int n, const Scalar& x0);
  static Ptr homfly_deriv(int m, int n, const Scalar& a0, const Scalar& z0);
  static Ptr homfly_coeff_deriv(int z_power, int l, const Scalar& a0);
  static Ptr kauffman_coeff_deriv(int x_power, int l, const Scalar& a0);
  static Ptr sum(Ptr lhs, Ptr rhs);
  static Ptr product(Ptr lhs, Ptr rhs);
  static Ptr scale(const Scalar& c, Ptr v);

  Kind kind() const { return kind_; }
  bool is_leaf() const { return kind_ != Kind::Sum && kind_ != Kind::Product && kind_ != Kind::Scale; }
  // Integer arguments of a leaf, in written order.
  const std::vector<int>& orders() const { return orders_; }
  // Point arguments of a leaf, in written order.
  const std::vector<Scalar>& point() const { return point_; }
  // Value of Const, factor of Scale.
  const Scalar& coefficient() const { return coefficient_; }
  const std::vector<Ptr>& children() const { return children_; }

  friend bool operator==(const Descriptor& a, const Descriptor& b);

 private:
  Descriptor(Kind kind, std::vector<int> orders, std::vector<Scalar> point, Scalar c, std::vector<Ptr> children);

  Kind kind_;
  std::vector<int> orders_;
  std::vector<Scalar> point_;
  Scalar coefficient_;
  std::vector<Ptr> children_;
};

using DescriptorPtr = Descriptor::Ptr;

bool equal(const DescriptorPtr& a, const DescriptorPtr& b);

// `a2`, `a4`, ... are shorthand for conway_coeff. Binary and unary minus
// become scale(-1, v). Subtrees made only of constants fold to one constant.
// Raises SyntaxError with the offending position.
DescriptorPtr parse_descriptor(std::string_view text);

// Text that parses back to an equal tree for any tree the parser produces.
std::string to_string(const DescriptorPtr& d);

// Scalar expressions: integers, decimals (approximate), `I`, `sqrtN` or
// `sqrt(expr)` (exact for rational squares), parentheses, + - * /.
// Raises SyntaxError.
Scalar parse_scalar(std::string_view text);

}  // namespace knotinv
