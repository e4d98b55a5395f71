#include "knotinv/multipoly.hpp"

#include "knotinv/error.hpp"

namespace knotinv {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != vars_.size())
    throw Error(ErrorKind::InvalidArgument, "exponent arity does not match the variable list");
  for (int k : e)
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in MultiPoly");
  if (c.is_zero(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero(0.0)) terms_.erase(it);
  }
}

Scalar MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    (void)c;
    d = std::max(d, e.at(var));
  }
  return d;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != vars_.size())
    throw Error(ErrorKind::UnknownVariable, "point arity does not match the variable list");
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += c.to_string();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) s += "*" + p.vars()[i] + "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace knotinv
