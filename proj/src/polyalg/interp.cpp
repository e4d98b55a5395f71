#include "knotinv/interp.hpp"

#include <algorithm>
#include <cmath>

#include "knotinv/error.hpp"

namespace knotinv {

std::vector<Scalar> forward_differences(std::span<const Scalar> values) {
  std::vector<Scalar> row(values.begin(), values.end());
  std::vector<Scalar> leading;
  leading.reserve(row.size());
  while (!row.empty()) {
    leading.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return leading;
}

std::vector<Scalar> newton_monomial_coefficients(std::span<const Scalar> values) {
  if (values.empty()) throw Error(ErrorKind::IncompleteGrid, "no values to interpolate");
  const auto diffs = forward_differences(values);
  const std::size_t n = diffs.size();
  std::vector<Scalar> coeffs(n);
  // binom(x, k) = x (x-1) ... (x-k+1) / k!, kept as monomial coefficients.
  std::vector<Scalar> basis{Scalar(1)};
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      std::vector<Scalar> next(basis.size() + 1);
      const Scalar shift(static_cast<long>(k - 1));
      const Scalar inv_k = Scalar(1) / Scalar(static_cast<long>(k));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i] * inv_k;
        next[i] -= basis[i] * shift * inv_k;
      }
      basis = std::move(next);
    }
    if (diffs[k].is_zero(0.0)) continue;
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += diffs[k] * basis[i];
  }
  return coeffs;
}

LaurentPoly interp_grid(std::span<const Scalar> values, const std::string& var) {
  const auto coeffs = newton_monomial_coefficients(values);
  LaurentPoly p(var);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term(HalfInt::integer(static_cast<int>(i)), coeffs[i]);
  return p;
}

MultiPoly interp_multigrid(const Grid& grid) {
  if (grid.dims == 0 || grid.side == 0)
    throw Error(ErrorKind::IncompleteGrid, "empty interpolation grid");
  const std::size_t dims = grid.dims, side = grid.side;
  std::size_t total = 1;
  for (std::size_t d = 0; d < dims; ++d) total *= side;

  // Row-major dense copy, x0 slowest.
  std::vector<Scalar> data(total);
  std::vector<int> idx(dims, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t d = dims; d-- > 0;) {
      idx[d] = static_cast<int>(rest % side);
      rest /= side;
    }
    auto it = grid.values.find(idx);
    if (it == grid.values.end()) {
      std::string where;
      for (int v : idx) where += (where.empty() ? "" : ",") + std::to_string(v);
      throw Error(ErrorKind::IncompleteGrid, "grid value missing at (" + where + ")");
    }
    data[flat] = it->second;
  }

  // Replace every fiber along each dimension by its monomial coefficients.
  std::size_t stride = 1;
  for (std::size_t d = dims; d-- > 0;) {
    std::vector<Scalar> fiber(side);
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % side != 0) continue;
      for (std::size_t j = 0; j < side; ++j) fiber[j] = data[base + j * stride];
      auto coeffs = newton_monomial_coefficients(fiber);
      for (std::size_t j = 0; j < side; ++j) data[base + j * stride] = coeffs[j];
    }
    stride *= side;
  }

  std::vector<std::string> vars;
  for (std::size_t d = 0; d < dims; ++d) vars.push_back("x" + std::to_string(d));
  MultiPoly p(vars);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    std::vector<int> e(dims);
    for (std::size_t d = dims; d-- > 0;) {
      e[d] = static_cast<int>(rest % side);
      rest /= side;
    }
    p.add_term(e, data[flat]);
  }
  return p;
}

DegreeFit finite_diff_degree(std::span<const Scalar> values, int n, double tol) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "candidate degree must be nonnegative");
  const int m = static_cast<int>(values.size()) - 1;
  if (m < n + 1)
    throw Error(ErrorKind::TooFewValues, "need values at 0.." + std::to_string(n + 1) +
                                             " to test degree " + std::to_string(n));
  double scale = 1.0;
  for (const auto& v : values) scale = std::max(scale, v.abs());

  std::vector<Scalar> row(values.begin(), values.end());
  for (int d = 0; d <= n; ++d) {
    // row holds the d-th differences; form the (d+1)-th.
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
    const double bound = tol * scale * std::ldexp(1.0, d + 1);
    bool vanish = std::all_of(row.begin(), row.end(), [&](const Scalar& v) {
      return v.is_exact() ? v.exact().is_zero() : v.abs() <= bound;
    });
    if (vanish) return {true, d};
  }
  return {false, -1};
}

}  // namespace knotinv
