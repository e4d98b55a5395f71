#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotinv/descriptor.hpp"
#include "knotinv/interp.hpp"
#include "knotinv/multipoly.hpp"
#include "knotinv/skein.hpp"
#include "knotinv/table.hpp"

namespace knotinv {

enum class HatKind { Bar, Star, Hat };
std::string to_string(HatKind k);

struct HatResult {
  HatKind kind = HatKind::Bar;
  std::string descriptor;
  int degree = 0;
  std::string knot;
  std::vector<std::string> patterns;
  MultiPoly poly{{"x"}};  // x for bar/star, x0..xk for hat
  Grid grid;

  // The polynomial reproduces every grid value.
  bool grid_consistent(double tol = kDefaultTolerance) const;
  // Every variable has degree <= the declared degree.
  bool degrees_bounded() const;
};

// Interpolates v(L # K^i), i = 0..n.
HatResult bar_op(const DescriptorPtr& v, int n, const NamedKnot& pattern, const NamedKnot& k,
                 SkeinEngine& engine = default_engine());

// Interpolates v(K # L^i), i = 0..n.
HatResult star_op(const DescriptorPtr& v, int n, const NamedKnot& pattern, const NamedKnot& k,
                  SkeinEngine& engine = default_engine());

inline constexpr std::size_t kDefaultGridBudget = 4096;

// Interpolates v(K^i0 # L1^i1 # ... # Lk^ik) over {0..n}^(k+1). Raises
// GridBudgetExceeded when (n+1)^(k+1) exceeds the budget.
HatResult hat_op(const DescriptorPtr& v, int n, const NamedKnot& k, const std::vector<NamedKnot>& patterns,
                 std::size_t budget = kDefaultGridBudget, SkeinEngine& engine = default_engine());

struct RankReport {
  std::vector<std::string> invariants;
  std::vector<std::string> knots;
  std::vector<std::vector<Scalar>> matrix;  // matrix[i][j] = v_j(K_i)
  std::size_t rank = 0;
  std::vector<std::size_t> independent;  // lexicographically first independent columns
};

// Rank and pivot columns of a matrix by fraction-free elimination.
// Approximate entries count as zero within tol.
RankReport matrix_rank(std::vector<std::vector<Scalar>> matrix, double tol = kDefaultTolerance);

RankReport rank_report(const std::vector<DescriptorPtr>& invariants, const std::vector<NamedKnot>& knots,
                       SkeinEngine& engine = default_engine());

nlohmann::json to_json(const HatResult& r);
nlohmann::json to_json(const RankReport& r);

}  // namespace knotinv
