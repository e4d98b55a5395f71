#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "knotinv/scalar.hpp"

namespace knotinv {

// Polynomial in x_0..x_k with nonnegative integer exponents.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;

  explicit MultiPoly(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Scalar& c);
  Scalar coeff(const Exponent& e) const;
  int degree_in(std::size_t var) const;  // -1 for the zero polynomial

  Scalar evaluate(std::span<const Scalar> point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<std::string> vars_;
  std::map<Exponent, Scalar> terms_;
};

// Terms in ascending lexicographic exponent order, same layout as the
// Laurent canonical form.
std::string to_string(const MultiPoly& p);

}  // namespace knotinv
