#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "knotinv/laurent.hpp"
#include "knotinv/multipoly.hpp"

namespace knotinv {

// Leading entries of the forward-difference table: Δ^k f(0), k = 0..size-1.
std::vector<Scalar> forward_differences(std::span<const Scalar> values);

// Monomial coefficients c_0..c_n of the unique degree <= n polynomial through
// (i, values[i]), i = 0..n, via the Newton forward form.
std::vector<Scalar> newton_monomial_coefficients(std::span<const Scalar> values);

// Interpolant through (i, values[i]), i = 0..n, as a polynomial in `var`.
LaurentPoly interp_grid(std::span<const Scalar> values, const std::string& var = "x");

// Tensor grid {0..side-1}^dims, keyed by index tuples.
struct Grid {
  std::size_t dims = 1;
  std::size_t side = 1;
  std::map<std::vector<int>, Scalar> values;
};

// Interpolates dimension by dimension; raises IncompleteGrid when a grid
// point is missing. Variables are named x0..x{dims-1}.
MultiPoly interp_multigrid(const Grid& grid);

struct DegreeFit {
  bool fits = false;
  int degree = -1;  // minimal fitting degree when fits

  friend bool operator==(const DegreeFit&, const DegreeFit&) = default;
};

// Values at arguments 0..m. Fits with minimal d <= n iff the (d+1)-th
// differences vanish (exactly, or within tol times a magnitude scale for
// approximate data). Raises TooFewValues when m < n + 1.
DegreeFit finite_diff_degree(std::span<const Scalar> values, int n, double tol = kDefaultTolerance);

}  // namespace knotinv
