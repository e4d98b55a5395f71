#include "knotinv/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "knotinv/error.hpp"

namespace knotinv {

Descriptor::Descriptor(Kind kind, std::vector<int> orders, std::vector<Scalar> point, Scalar c,
                       std::vector<Ptr> children)
    : kind_(kind),
      orders_(std::move(orders)),
      point_(std::move(point)),
      coefficient_(std::move(c)),
      children_(std::move(children)) {}

DescriptorPtr Descriptor::constant(const Scalar& c) { return Ptr(new Descriptor(Kind::Const, {}, {}, c, {})); }

DescriptorPtr Descriptor::conway_coeff(int k) { return Ptr(new Descriptor(Kind::ConwayCoeff, {k}, {}, {}, {})); }

DescriptorPtr Descriptor::jones_deriv(int n, const Scalar& t0) {
  return Ptr(new Descriptor(Kind::JonesDeriv, {n}, {t0}, {}, {}));
}

DescriptorPtr Descriptor::alexander_deriv(int n, const Scalar& t0) {
  return Ptr(new Descriptor(Kind::AlexanderDeriv, {n}, {t0}, {}, {}));
}

DescriptorPtr Descriptor::conway_deriv(int n, const Scalar& z0) {
  return Ptr(new Descriptor(Kind::ConwayDeriv, {n}, {z0}, {}, {}));
}

DescriptorPtr Descriptor::q_deriv(int n, const Scalar& x0) {
  return Ptr(new Descriptor(Kind::QDeriv, {n}, {x0}, {}, {}));
}

DescriptorPtr Descriptor::homfly_deriv(int m, int n, const Scalar& a0, const Scalar& z0) {
  return Ptr(new Descriptor(Kind::HomflyDeriv, {m, n}, {a0, z0}, {}, {}));
}

DescriptorPtr Descriptor::homfly_coeff_deriv(int z_power, int l, const Scalar& a0) {
  return Ptr(new Descriptor(Kind::HomflyCoeffDeriv, {z_power, l}, {a0}, {}, {}));
}

DescriptorPtr Descriptor::kauffman_coeff_deriv(int x_power, int l, const Scalar& a0) {
  return Ptr(new Descriptor(Kind::KauffmanCoeffDeriv, {x_power, l}, {a0}, {}, {}));
}

DescriptorPtr Descriptor::sum(Ptr lhs, Ptr rhs) {
  return Ptr(new Descriptor(Kind::Sum, {}, {}, {}, {std::move(lhs), std::move(rhs)}));
}

DescriptorPtr Descriptor::product(Ptr lhs, Ptr rhs) {
  return Ptr(new Descriptor(Kind::Product, {}, {}, {}, {std::move(lhs), std::move(rhs)}));
}

DescriptorPtr Descriptor::scale(const Scalar& c, Ptr v) {
  return Ptr(new Descriptor(Kind::Scale, {}, {}, c, {std::move(v)}));
}

bool operator==(const Descriptor& a, const Descriptor& b) {
  if (a.kind_ != b.kind_ || a.orders_ != b.orders_ || a.point_ != b.point_ ||
      !(a.coefficient_ == b.coefficient_) || a.children_.size() != b.children_.size())
    return false;
  for (std::size_t i = 0; i < a.children_.size(); ++i)
    if (!equal(a.children_[i], b.children_[i])) return false;
  return true;
}

bool equal(const DescriptorPtr& a, const DescriptorPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ------------------------------------------------------------------ parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DescriptorPtr descriptor() {
    auto d = expr();
    finish();
    return d;
  }

  Scalar scalar() {
    Scalar s = scalar_expr();
    finish();
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void finish() {
    if (peek() != '\0') fail("unexpected trailing input");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string_view peek_identifier() {
    skip_ws();
    std::size_t end = pos_;
    if (end < text_.size() && ident_start(text_[end]))
      while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  int nonneg_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  // ---- scalar grammar

  Scalar scalar_expr() {
    Scalar v = scalar_term();
    for (;;) {
      if (accept('+'))
        v += scalar_term();
      else if (accept('-'))
        v -= scalar_term();
      else
        return v;
    }
  }

  Scalar scalar_term() {
    Scalar v = scalar_unary();
    for (;;) {
      if (accept('*')) {
        v *= scalar_unary();
      } else if (peek() == '/') {
        std::size_t at = pos_++;
        Scalar d = scalar_unary();
        if (d.is_exact() && d.exact().is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar scalar_unary() {
    if (accept('-')) return -scalar_unary();
    if (accept('+')) return scalar_unary();
    return scalar_atom();
  }

  bool at_scalar_atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return true;
    auto id = peek_identifier();
    return id == "I" || id == "sqrt" || (id.size() > 4 && id.substr(0, 4) == "sqrt" &&
                                         std::isdigit(static_cast<unsigned char>(id[4])));
  }

  Scalar scalar_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = scalar_expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    auto id = peek_identifier();
    if (id == "I") {
      pos_ += 1;
      return Scalar::imaginary_unit();
    }
    if (id.substr(0, 4) == "sqrt") {
      pos_ += 4;
      if (peek() == '(') {
        ++pos_;
        Scalar v = scalar_expr();
        expect(')');
        return principal_sqrt(v);
      }
      // sqrtN or sqrt-N
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected an integer or '(' after sqrt");
      Scalar v = number();
      return principal_sqrt(negative ? -v : v);
    }
    fail("expected a number");
  }

  Scalar number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    bool decimal = false;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      decimal = true;
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_ + 1;
      if (mark < text_.size() && (text_[mark] == '+' || text_[mark] == '-')) ++mark;
      if (mark < text_.size() && std::isdigit(static_cast<unsigned char>(text_[mark]))) {
        decimal = true;
        pos_ = mark;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    std::string token(text_.substr(start, pos_ - start));
    if (token.empty() || token == ".") {
      pos_ = start;
      fail("expected a number");
    }
    if (decimal) return Scalar::approx({std::stod(token), 0.0});
    return Scalar(mpq_class(token));
  }

  // ---- descriptor grammar

  static bool is_const(const DescriptorPtr& d) { return d->kind() == Descriptor::Kind::Const; }

  DescriptorPtr expr() {
    auto v = term();
    for (;;) {
      if (accept('+')) {
        auto r = term();
        v = is_const(v) && is_const(r) ? Descriptor::constant(v->coefficient() + r->coefficient())
                                       : Descriptor::sum(v, r);
      } else if (accept('-')) {
        auto r = negate(term());
        v = is_const(v) && is_const(r) ? Descriptor::constant(v->coefficient() + r->coefficient())
                                       : Descriptor::sum(v, r);
      } else {
        return v;
      }
    }
  }

  DescriptorPtr term() {
    auto v = unary();
    for (;;) {
      if (accept('*')) {
        auto r = unary();
        v = is_const(v) && is_const(r) ? Descriptor::constant(v->coefficient() * r->coefficient())
                                       : Descriptor::product(v, r);
      } else if (peek() == '/') {
        std::size_t at = pos_++;
        auto r = unary();
        if (!is_const(r)) {
          pos_ = at;
          fail("only constants may divide");
        }
        if (r->coefficient().is_exact() && r->coefficient().exact().is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        Scalar inv = Scalar(1) / r->coefficient();
        v = is_const(v) ? Descriptor::constant(v->coefficient() * inv) : Descriptor::scale(inv, v);
      } else {
        return v;
      }
    }
  }

  static DescriptorPtr negate(const DescriptorPtr& d) {
    if (is_const(d)) return Descriptor::constant(-d->coefficient());
    return Descriptor::scale(Scalar(-1), d);
  }

  DescriptorPtr unary() {
    if (accept('-')) return negate(unary());
    if (accept('+')) return unary();
    return primary();
  }

  DescriptorPtr primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      auto v = expr();
      expect(')');
      return v;
    }
    if (at_scalar_atom()) return Descriptor::constant(scalar_atom());

    const std::size_t at = pos_;
    std::string id(peek_identifier());
    if (id.empty()) fail("expected an invariant");
    pos_ += id.size();

    if (id.size() >= 2 && id[0] == 'a' &&
        std::all_of(id.begin() + 1, id.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      if (id.size() > 7) {
        pos_ = at;
        fail("coefficient index too large");
      }
      return Descriptor::conway_coeff(std::stoi(id.substr(1)));
    }
    if (id == "scale") {
      expect('(');
      Scalar k = scalar_expr();
      expect(',');
      auto v = expr();
      expect(')');
      return Descriptor::scale(k, v);
    }

    struct Shape {
      const char* name;
      int orders;
      int points;
    };
    static const Shape shapes[] = {
        {"conway_coeff", 1, 0},       {"jones_deriv", 1, 1},        {"alexander_deriv", 1, 1},
        {"conway_deriv", 1, 1},       {"q_deriv", 1, 1},            {"homfly_deriv", 2, 2},
        {"homfly_coeff_deriv", 2, 1}, {"kauffman_coeff_deriv", 2, 1},
    };
    const Shape* shape = nullptr;
    for (const auto& s : shapes)
      if (id == s.name) shape = &s;
    if (!shape) {
      pos_ = at;
      fail("unknown invariant '" + id + "'");
    }

    expect('(');
    std::vector<int> orders;
    for (int i = 0; i < shape->orders; ++i) {
      if (i > 0) expect(',');
      orders.push_back(nonneg_integer());
    }
    std::vector<Scalar> point;
    if (shape->points > 0) {
      expect(';');
      for (int i = 0; i < shape->points; ++i) {
        if (i > 0) expect(',');
        point.push_back(scalar_expr());
      }
    }
    expect(')');

    if (id == "conway_coeff") return Descriptor::conway_coeff(orders[0]);
    if (id == "jones_deriv") return Descriptor::jones_deriv(orders[0], point[0]);
    if (id == "alexander_deriv") return Descriptor::alexander_deriv(orders[0], point[0]);
    if (id == "conway_deriv") return Descriptor::conway_deriv(orders[0], point[0]);
    if (id == "q_deriv") return Descriptor::q_deriv(orders[0], point[0]);
    if (id == "homfly_deriv") return Descriptor::homfly_deriv(orders[0], orders[1], point[0], point[1]);
    if (id == "homfly_coeff_deriv") return Descriptor::homfly_coeff_deriv(orders[0], orders[1], point[0]);
    return Descriptor::kauffman_coeff_deriv(orders[0], orders[1], point[0]);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const DescriptorPtr& d) {
  switch (d->kind()) {
    case Descriptor::Kind::Sum: return 1;
    case Descriptor::Kind::Product: return 2;
    case Descriptor::Kind::Const: {
      // Negative or compound constants need parentheses as operands.
      const std::string s = d->coefficient().to_string();
      return s.front() == '-' || s.find('/') != std::string::npos || s.find('*') != std::string::npos ? 0 : 3;
    }
    default: return 3;
  }
}

std::string wrap(const DescriptorPtr& d, int needed) {
  std::string s = to_string(d);
  return precedence(d) < needed ? "(" + s + ")" : s;
}

std::string join_args(const Descriptor& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.orders().size(); ++i) s += (i ? ", " : "") + std::to_string(d.orders()[i]);
  if (!d.point().empty()) {
    s += "; ";
    for (std::size_t i = 0; i < d.point().size(); ++i) s += (i ? ", " : "") + d.point()[i].to_string();
  }
  return s + ")";
}

}  // namespace

DescriptorPtr parse_descriptor(std::string_view text) { return Parser(text).descriptor(); }

Scalar parse_scalar(std::string_view text) { return Parser(text).scalar(); }

std::string to_string(const DescriptorPtr& d) {
  using K = Descriptor::Kind;
  switch (d->kind()) {
    case K::Const: return d->coefficient().to_string();
    case K::ConwayCoeff: return "conway_coeff" + join_args(*d);
    case K::JonesDeriv: return "jones_deriv" + join_args(*d);
    case K::AlexanderDeriv: return "alexander_deriv" + join_args(*d);
    case K::ConwayDeriv: return "conway_deriv" + join_args(*d);
    case K::QDeriv: return "q_deriv" + join_args(*d);
    case K::HomflyDeriv: return "homfly_deriv" + join_args(*d);
    case K::HomflyCoeffDeriv: return "homfly_coeff_deriv" + join_args(*d);
    case K::KauffmanCoeffDeriv: return "kauffman_coeff_deriv" + join_args(*d);
    case K::Sum: return wrap(d->children()[0], 1) + " + " + wrap(d->children()[1], 2);
    case K::Product: return wrap(d->children()[0], 2) + " * " + wrap(d->children()[1], 3);
    case K::Scale: return "scale(" + d->coefficient().to_string() + ", " + to_string(d->children()[0]) + ")";
  }
  return {};
}

}  // namespace knotinv
