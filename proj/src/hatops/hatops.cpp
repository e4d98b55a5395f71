#include "knotinv/hatops.hpp"

#include <algorithm>

#include "knotinv/error.hpp"
#include "knotinv/vassiliev.hpp"

namespace knotinv {

namespace {

void require_degree(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
}

MultiPoly rename_single(const MultiPoly& p) {
  MultiPoly out({"x"});
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

HatResult single_variable(HatKind kind, const DescriptorPtr& v, int n, const NamedKnot& fixed,
                          const NamedKnot& repeated, const std::string& knot, const std::string& pattern,
                          SkeinEngine& engine) {
  require_degree(n);
  HatResult r;
  r.kind = kind;
  r.descriptor = to_string(v);
  r.degree = n;
  r.knot = knot;
  r.patterns = {pattern};
  r.grid.dims = 1;
  r.grid.side = static_cast<std::size_t>(n) + 1;
  LinkDiagram current = fixed.diagram;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) current = connected_sum(current, repeated.diagram);
    r.grid.values[{i}] = eval_invariant(v, current, engine);
  }
  r.poly = rename_single(interp_multigrid(r.grid));
  return r;
}

}  // namespace

std::string to_string(HatKind k) {
  switch (k) {
    case HatKind::Bar: return "bar";
    case HatKind::Star: return "star";
    case HatKind::Hat: return "hat";
  }
  return {};
}

bool HatResult::grid_consistent(double tol) const {
  std::vector<Scalar> point;
  for (const auto& [idx, value] : grid.values) {
    point.assign(idx.begin(), idx.end());
    if (!approx_equal(poly.evaluate(point), value, tol)) return false;
  }
  return true;
}

bool HatResult::degrees_bounded() const {
  for (std::size_t i = 0; i < poly.arity(); ++i)
    if (poly.degree_in(i) > degree) return false;
  return true;
}

HatResult bar_op(const DescriptorPtr& v, int n, const NamedKnot& pattern, const NamedKnot& k, SkeinEngine& engine) {
  return single_variable(HatKind::Bar, v, n, pattern, k, k.name, pattern.name, engine);
}

HatResult star_op(const DescriptorPtr& v, int n, const NamedKnot& pattern, const NamedKnot& k,
                  SkeinEngine& engine) {
  return single_variable(HatKind::Star, v, n, k, pattern, k.name, pattern.name, engine);
}

HatResult hat_op(const DescriptorPtr& v, int n, const NamedKnot& k, const std::vector<NamedKnot>& patterns,
                 std::size_t budget, SkeinEngine& engine) {
  require_degree(n);
  const std::size_t dims = patterns.size() + 1;
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  std::size_t points = 1;
  bool over = false;
  for (std::size_t d = 0; d < dims && !over; ++d) {
    over = points > budget / side;
    points *= side;
  }
  if (over)
    throw Error(ErrorKind::GridBudgetExceeded, "grid of " + std::to_string(side) + "^" + std::to_string(dims) +
                                                   " points exceeds the budget of " + std::to_string(budget));

  std::vector<LinkDiagram> factors;
  factors.push_back(k.diagram);
  for (const auto& p : patterns) factors.push_back(p.diagram);

  HatResult r;
  r.kind = HatKind::Hat;
  r.descriptor = to_string(v);
  r.degree = n;
  r.knot = k.name;
  for (const auto& p : patterns) r.patterns.push_back(p.name);
  r.grid.dims = dims;
  r.grid.side = side;

  // Powers of each factor, shared across grid points.
  std::vector<std::vector<LinkDiagram>> powers(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    powers[d].push_back(LinkDiagram::unknot());
    for (std::size_t i = 1; i < side; ++i) powers[d].push_back(connected_sum(powers[d].back(), factors[d]));
  }

  std::vector<int> idx(dims, 0);
  for (std::size_t count = 0; count < points; ++count) {
    LinkDiagram sum = powers[0][static_cast<std::size_t>(idx[0])];
    for (std::size_t d = 1; d < dims; ++d) sum = connected_sum(sum, powers[d][static_cast<std::size_t>(idx[d])]);
    r.grid.values[idx] = eval_invariant(v, sum, engine);
    for (std::size_t d = dims; d-- > 0;) {
      if (++idx[d] < static_cast<int>(side)) break;
      idx[d] = 0;
    }
  }
  r.poly = interp_multigrid(r.grid);
  return r;
}

RankReport matrix_rank(std::vector<std::vector<Scalar>> m, double tol) {
  RankReport report;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged matrix");
  report.matrix = m;

  // Bareiss elimination, pivoting on the first usable column.
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero(tol)) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = Scalar();
    }
    prev = m[r][c];
    report.independent.push_back(c);
    ++r;
  }
  report.rank = r;
  return report;
}

RankReport rank_report(const std::vector<DescriptorPtr>& invariants, const std::vector<NamedKnot>& knots,
                       SkeinEngine& engine) {
  if (invariants.empty() || knots.empty())
    throw Error(ErrorKind::InvalidArgument, "rank needs at least one invariant and one knot");
  std::vector<std::vector<Scalar>> m;
  for (const auto& k : knots) {
    std::vector<Scalar> row;
    for (const auto& v : invariants) row.push_back(eval_invariant(v, k.diagram, engine));
    m.push_back(std::move(row));
  }
  RankReport report = matrix_rank(std::move(m));
  for (const auto& v : invariants) report.invariants.push_back(to_string(v));
  for (const auto& k : knots) report.knots.push_back(k.name);
  return report;
}

nlohmann::json to_json(const HatResult& r) {
  auto grid = nlohmann::json::array();
  for (const auto& [idx, value] : r.grid.values) grid.push_back({{"at", idx}, {"value", to_json(value)}});
  auto coefficients = nlohmann::json::array();
  for (const auto& [e, c] : r.poly.terms()) coefficients.push_back({{"exponent", e}, {"coefficient", to_json(c)}});
  return {{"operation", to_string(r.kind)},
          {"descriptor", r.descriptor},
          {"degree", r.degree},
          {"knot", r.knot},
          {"patterns", r.patterns},
          {"variables", r.poly.vars()},
          {"polynomial", to_string(r.poly)},
          {"coefficients", coefficients},
          {"grid", grid}};
}

nlohmann::json to_json(const RankReport& r) {
  auto matrix = nlohmann::json::array();
  for (const auto& row : r.matrix) {
    auto out = nlohmann::json::array();
    for (const auto& x : row) out.push_back(to_json(x));
    matrix.push_back(out);
  }
  auto independent = nlohmann::json::array();
  for (auto c : r.independent) independent.push_back(r.invariants.empty() ? nlohmann::json(c) : nlohmann::json(r.invariants[c]));
  return {{"rank", r.rank},
          {"invariants", r.invariants},
          {"knots", r.knots},
          {"independent", independent},
          {"independent_columns", r.independent},
          {"matrix", matrix}};
}

}  // namespace knotinv
