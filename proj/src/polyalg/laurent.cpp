#include "knotinv/laurent.hpp"

#include <cmath>

#include "knotinv/error.hpp"

namespace knotinv {

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(as_integer());
  return std::to_string(twice_) + "/2";
}

std::string exponent_text(HalfInt e) {
  if (e.is_integer()) return std::to_string(e.as_integer());
  return "(" + e.to_string() + ")";
}

namespace {

bool is_structural_zero(const Scalar& c) { return c.is_exact() ? c.exact().is_zero() : c.to_complex() == std::complex<double>(); }

template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, const Scalar& c) {
  if (is_structural_zero(c)) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (is_structural_zero(it->second)) terms.erase(it);
  }
}

std::string common_var(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var() == b.var()) return a.var();
  if (a.is_constant()) return b.var();
  if (b.is_constant()) return a.var();
  throw Error(ErrorKind::UnknownVariable,
              "variable mismatch: '" + a.var() + "' vs '" + b.var() + "'");
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(const Scalar& c, std::string var) {
  LaurentPoly p(std::move(var));
  p.add_term(HalfInt{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::string var, const Scalar& c, HalfInt e) {
  LaurentPoly p(std::move(var));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::half_difference(std::string var) {
  LaurentPoly p(std::move(var));
  p.add_term(HalfInt::halves(1), 1);
  p.add_term(HalfInt::halves(-1), -1);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == HalfInt{});
}

Scalar LaurentPoly::coeff(HalfInt e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<HalfInt> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<HalfInt> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(HalfInt e, const Scalar& c) { accumulate(terms_, e, c); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  var_ = common_var(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  var_ = common_var(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  if (is_structural_zero(c)) {
    terms_.clear();
    return *this;
  }
  Terms out;
  for (const auto& [e, v] : terms_) accumulate(out, e, v * c);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(common_var(a, b));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(1, var_);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(HalfInt e) const {
  LaurentPoly r(var_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k + e, c);
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_ != b.terms_) return false;
  return a.var_ == b.var_ || a.is_constant();
}

// --------------------------------------------------------------- LaurentPoly2

int LaurentPoly2::index_of(std::string_view var) const {
  if (var == vars_[0]) return 0;
  if (var == vars_[1]) return 1;
  throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(var) + "'");
}

Scalar LaurentPoly2::coeff(HalfInt e1, HalfInt e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? Scalar() : it->second;
}

void LaurentPoly2::add_term(HalfInt e1, HalfInt e2, const Scalar& c) {
  accumulate(terms_, Exponent{e1, e2}, c);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Scalar& c) {
  Terms out;
  for (const auto& [e, v] : terms_) accumulate(out, e, v * c);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r(a.vars_[0], a.vars_[1]);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned e) const {
  LaurentPoly2 result(vars_[0], vars_[1]);
  result.add_term(HalfInt{}, HalfInt{}, 1);
  LaurentPoly2 base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly2::coefficient_of(std::string_view var, HalfInt e) const {
  int idx = index_of(var);
  LaurentPoly r(vars_[1 - idx]);
  for (const auto& [k, c] : terms_) {
    if (idx == 1 && k.second == e) r.add_term(k.first, c);
    if (idx == 0 && k.first == e) r.add_term(k.second, c);
  }
  return r;
}

// ---------------------------------------------------------------- calculus

LaurentPoly derivative(const LaurentPoly& p, std::string_view var, unsigned order) {
  if (var != p.var() && !p.is_constant())
    throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(var) + "'");
  LaurentPoly cur = p;
  for (unsigned k = 0; k < order && !cur.is_zero(); ++k) {
    LaurentPoly next(p.var());
    for (const auto& [e, c] : cur.terms()) {
      if (e == HalfInt{}) continue;
      next.add_term(e - HalfInt::integer(1), c * e.as_scalar());
    }
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly2 derivative(const LaurentPoly2& p, std::string_view var, unsigned order) {
  int idx = p.index_of(var);
  LaurentPoly2 cur = p;
  for (unsigned k = 0; k < order && !cur.is_zero(); ++k) {
    LaurentPoly2 next(p.var(0), p.var(1));
    for (const auto& [e, c] : cur.terms()) {
      HalfInt d = idx == 0 ? e.first : e.second;
      if (d == HalfInt{}) continue;
      if (idx == 0)
        next.add_term(e.first - HalfInt::integer(1), e.second, c * d.as_scalar());
      else
        next.add_term(e.first, e.second - HalfInt::integer(1), c * d.as_scalar());
    }
    cur = std::move(next);
  }
  return cur;
}

Scalar power(const Scalar& x, HalfInt e) {
  if (x.is_zero(0.0)) {
    if (e < HalfInt{}) throw Error(ErrorKind::PoleAtZero, "negative power of zero");
    return e == HalfInt{} ? Scalar(1) : Scalar();
  }
  if (e.is_integer()) return x.pow(e.as_integer());
  if (x.is_negative_real())
    throw Error(ErrorKind::BranchUndefined,
                "half-integer power of the negative real " + x.to_string());
  return principal_sqrt(x).pow(e.twice());
}

Scalar evaluate(const LaurentPoly& p, const Scalar& x) {
  Scalar sum;
  for (const auto& [e, c] : p.terms()) sum += c * power(x, e);
  return sum;
}

Scalar evaluate(const LaurentPoly2& p, const Scalar& x, const Scalar& y) {
  Scalar sum;
  std::map<HalfInt, Scalar> xs, ys;
  auto cached = [](std::map<HalfInt, Scalar>& cache, const Scalar& base, HalfInt e) {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, power(base, e)).first;
    return it->second;
  };
  for (const auto& [e, c] : p.terms())
    sum += c * cached(xs, x, e.first) * cached(ys, y, e.second);
  return sum;
}

Scalar evaluate(const LaurentPoly2& p, const std::map<std::string, Scalar>& point) {
  auto find = [&](const std::string& v) {
    auto it = point.find(v);
    if (it == point.end()) throw Error(ErrorKind::UnknownVariable, "no value for '" + v + "'");
    return it->second;
  };
  return evaluate(p, find(p.var(0)), find(p.var(1)));
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::PoleAtZero, "division by the zero polynomial");
  std::string var = common_var(num, den);
  LaurentPoly rem = num;
  LaurentPoly quot(var);
  const HalfInt den_max = *den.max_exponent();
  const HalfInt den_min = *den.min_exponent();
  const Scalar lead = den.coeff(den_max);
  while (!rem.is_zero()) {
    HalfInt top = *rem.max_exponent();
    if (top - den_max < *rem.min_exponent() - den_min) break;
    Scalar q = rem.coeff(top) / lead;
    LaurentPoly step = LaurentPoly::monomial(var, q, top - den_max);
    quot += step;
    LaurentPoly next = rem - step * den;
    // The leading term cancels by construction; drop any roundoff residue.
    LaurentPoly cleaned(var);
    for (const auto& [e, c] : next.terms())
      if (e != top) cleaned.add_term(e, c);
    rem = std::move(cleaned);
  }
  for (const auto& [e, c] : rem.terms()) {
    (void)e;
    if (!c.is_zero()) throw Error(ErrorKind::InexactDivision, "polynomial division leaves a remainder");
  }
  return quot;
}

namespace {

// Raises one substitution image to the power e, memoized per exponent.
class ImagePowers {
 public:
  explicit ImagePowers(const LaurentPoly& image) : image_(image) {}

  LaurentPoly get(HalfInt e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    LaurentPoly r = compute(e);
    cache_.emplace(e, r);
    return r;
  }

 private:
  LaurentPoly compute(HalfInt e) const {
    if (image_.is_zero()) return LaurentPoly::constant(power(Scalar(), e), image_.var());
    if (image_.is_monomial()) {
      auto [f, c] = *image_.terms().begin();
      int twice = f.twice() * e.twice();
      if (twice % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "substitution produces a quarter-integer exponent");
      return LaurentPoly::monomial(image_.var(), power(c, e), HalfInt::halves(twice / 2));
    }
    if (!e.is_integer() || e < HalfInt{})
      throw Error(ErrorKind::InvalidArgument,
                  "non-monomial image raised to exponent " + e.to_string());
    return image_.pow(static_cast<unsigned>(e.as_integer()));
  }

  const LaurentPoly& image_;
  std::map<HalfInt, LaurentPoly> cache_;
};

}  // namespace

LaurentPoly substitute(const LaurentPoly2& p, const LaurentPoly& image1, const LaurentPoly& image2) {
  std::string var = common_var(image1, image2);
  // Negative powers of a non-monomial image are cleared first.
  HalfInt clear1{}, clear2{};
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    if (!image1.is_monomial() && e.first < -clear1) clear1 = -e.first;
    if (!image2.is_monomial() && e.second < -clear2) clear2 = -e.second;
  }
  ImagePowers pow1(image1), pow2(image2);
  LaurentPoly sum(var);
  for (const auto& [e, c] : p.terms())
    sum += (pow1.get(e.first + clear1) * pow2.get(e.second + clear2)) * c;
  if (clear1 != HalfInt{}) sum = divide_exact(sum, pow1.get(clear1));
  if (clear2 != HalfInt{}) sum = divide_exact(sum, pow2.get(clear2));
  LaurentPoly out(var);
  for (const auto& [e, c] : sum.terms()) out.add_term(e, c);
  return out;
}

std::vector<Scalar> series_compose(const LaurentPoly& f, const std::vector<Scalar>& g, unsigned n) {
  if (g.size() < n + 1)
    throw Error(ErrorKind::InvalidArgument, "series for g is shorter than the requested order");
  const Scalar g0 = g[0];
  // h = g - g(a), truncated at order n; hk holds h^k.
  std::vector<Scalar> h(g.begin(), g.begin() + n + 1);
  h[0] = Scalar();
  std::vector<Scalar> hk(n + 1);
  hk[0] = Scalar(1);
  std::vector<Scalar> out(n + 1);
  LaurentPoly fk = f;
  Scalar factorial(1);
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      fk = derivative(fk, f.var(), 1);
      factorial *= Scalar(static_cast<long>(k));
      std::vector<Scalar> next(n + 1);
      for (unsigned i = 0; i <= n; ++i) {
        if (hk[i].is_zero(0.0)) continue;
        for (unsigned j = 1; i + j <= n; ++j) next[i + j] += hk[i] * h[j];
      }
      hk = std::move(next);
    }
    bool any = false;
    for (const auto& v : hk) any = any || !v.is_zero(0.0);
    if (!any) break;
    Scalar coef = evaluate(fk, g0) / factorial;
    for (unsigned i = 0; i <= n; ++i) out[i] += coef * hk[i];
  }
  return out;
}

LaurentPoly shift_argument(const LaurentPoly& p, const Scalar& s) {
  if (p.is_zero()) return p;
  if (*p.min_exponent() < HalfInt{} || !p.max_exponent()->is_integer())
    throw Error(ErrorKind::InvalidArgument, "argument shift needs an ordinary polynomial");
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    if (!e.is_integer())
      throw Error(ErrorKind::InvalidArgument, "argument shift needs integral exponents");
  }
  LaurentPoly step(p.var());
  step.add_term(HalfInt::integer(1), 1);
  step.add_term(HalfInt{}, s);
  LaurentPoly result(p.var());
  for (int e = p.max_exponent()->as_integer(); e >= 0; --e) {
    result = result * step;
    result.add_term(HalfInt{}, p.coeff(HalfInt::integer(e)));
  }
  return result;
}

// ------------------------------------------------------------------ printing

namespace {

std::string term_text(const Scalar& c, const std::vector<std::pair<std::string, HalfInt>>& factors) {
  std::string s = c.to_string();
  for (const auto& [v, e] : factors)
    if (e != HalfInt{}) s += "*" + v + "^" + exponent_text(e);
  return s;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += term_text(c, {{p.var(), e}});
  }
  return s;
}

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += term_text(c, {{p.var(0), e.first}, {p.var(1), e.second}});
  }
  return s;
}

}  // namespace knotinv
