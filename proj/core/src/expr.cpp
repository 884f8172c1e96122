#include "qcov/expr.hpp"

#include <cctype>

namespace qcov {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

ExprPtr make(Expr::Kind kind, std::size_t pos, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->position = pos;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < s_.size() ? std::string("expected '") + c + "', found '" + s_[pos_] + "'"
                            : std::string("expected '") + c + "' at end of input");
    }
  }

  // Matches "(x)" with optional inner whitespace without consuming otherwise.
  bool accept_otimes() {
    skip();
    std::size_t p = pos_;
    if (p >= s_.size() || s_[p] != '(') return false;
    ++p;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    if (p >= s_.size() || s_[p] != 'x') return false;
    ++p;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    if (p >= s_.size() || s_[p] != ')') return false;
    pos_ = p + 1;
    return true;
  }

  bool keyword(const char* kw) {
    skip();
    const std::string k(kw);
    if (s_.compare(pos_, k.size(), k) != 0) return false;
    pos_ += k.size();
    return true;
  }

  ExprPtr expr() {
    skip();
    const std::size_t start = pos_;
    std::vector<ExprPtr> parts;
    if (accept('-')) {
      parts.push_back(make(Expr::Kind::negate, start, {tterm()}));
    } else {
      parts.push_back(tterm());
    }
    while (true) {
      const char c = peek();
      const std::size_t at = pos_;
      if (c == '+') {
        ++pos_;
        parts.push_back(tterm());
      } else if (c == '-') {
        ++pos_;
        parts.push_back(make(Expr::Kind::negate, at, {tterm()}));
      } else {
        break;
      }
    }
    if (parts.size() == 1) return parts.front();
    return make(Expr::Kind::sum, start, std::move(parts));
  }

  ExprPtr tterm() {
    ExprPtr left = term();
    const std::size_t at = pos_;
    if (accept_otimes()) return make(Expr::Kind::tensor, at, {left, term()});
    return left;
  }

  bool starts_factor() {
    const char c = peek();
    if (c == '\0') return false;
    if (c == '(') {
      const std::size_t save = pos_;
      const bool ot = accept_otimes();
      pos_ = save;
      return !ot;
    }
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  ExprPtr term() {
    const std::size_t start = (skip(), pos_);
    std::vector<ExprPtr> factors{factor()};
    while (true) {
      if (accept('*')) {
        factors.push_back(factor());
      } else if (starts_factor()) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return factors.front();
    return make(Expr::Kind::product, start, std::move(factors));
  }

  ExprPtr factor() {
    ExprPtr a = atom();
    while (true) {
      const std::size_t at = pos_;
      if (!accept('\'')) break;
      a = make(Expr::Kind::star, at, {a});
    }
    const std::size_t at = pos_;
    if (accept('^')) {
      auto p = std::make_shared<Expr>();
      p->kind = Expr::Kind::power;
      p->position = at;
      p->exponent = integer();
      p->args = {a};
      return p;
    }
    return a;
  }

  int integer() {
    skip();
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 6) {
      pos_ = start;
      fail("exponent out of range");
    }
    const int v = std::stoi(digits);
    return negative ? -v : v;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  ExprPtr atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = digits();
      std::string den = "1";
      const std::size_t save = pos_;
      if (accept('/')) {
        skip();
        den = digits();
        if (den.empty()) fail("expected denominator");
        if (Rational(den) == 0) {
          pos_ = save;
          fail("zero denominator");
        }
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::rational;
      e->position = at;
      e->value = Rational(num + "/" + den);
      e->value.canonicalize();
      return e;
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (keyword("tensor")) {
      expect('(');
      ExprPtr left = expr();
      expect(',');
      ExprPtr right = expr();
      expect(')');
      return make(Expr::Kind::tensor, at, {left, right});
    }
    static const std::pair<const char*, Expr::Kind> names[] = {
        {"al", Expr::Kind::alpha}, {"bt", Expr::Kind::beta}, {"gt", Expr::Kind::gamma},
        {"t", Expr::Kind::t},      {"z", Expr::Kind::zeta},  {"q", Expr::Kind::q}};
    for (const auto& [name, kind] : names) {
      if (keyword(name)) return make(kind, at);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

bool is_scalar(const Element& x) {
  return x.terms().empty() || (x.terms().size() == 1 && x.terms().begin()->first.is_identity());
}

Scalar scalar_part(const Element& x) {
  return x.terms().empty() ? Scalar(x.order()) : x.terms().begin()->second;
}

TensorElement zero_tensor(int n) { return TensorElement({n, n}, n); }

TensorElement as_two_leg(const Value& v, int n, std::size_t pos, const char* what) {
  if (const auto* t = std::get_if<TensorElement>(&v)) return *t;
  const Element& x = std::get<Element>(v);
  if (x.is_zero()) return zero_tensor(n);
  throw DomainError(std::string("cannot ") + what + " an element and a tensor (at " +
                    std::to_string(pos) + ")");
}

Value add(const Value& a, const Value& b, std::size_t pos) {
  if (a.index() == 0 && b.index() == 0) return std::get<Element>(a) + std::get<Element>(b);
  const int n = a.index() == 0 ? std::get<Element>(a).n() : std::get<TensorElement>(a).legs()[0];
  return as_two_leg(a, n, pos, "add") + as_two_leg(b, n, pos, "add");
}

Value multiply(const Value& a, const Value& b, std::size_t pos) {
  if (a.index() == 0 && b.index() == 0) return std::get<Element>(a) * std::get<Element>(b);
  if (a.index() == 1 && b.index() == 1) return std::get<TensorElement>(a) * std::get<TensorElement>(b);
  const Element& x = a.index() == 0 ? std::get<Element>(a) : std::get<Element>(b);
  const TensorElement& t = a.index() == 1 ? std::get<TensorElement>(a) : std::get<TensorElement>(b);
  if (!is_scalar(x)) {
    throw DomainError("cannot multiply an element and a tensor (at " + std::to_string(pos) + ")");
  }
  return scalar_part(x) * t;
}

Value raise(const Value& v, int k, std::size_t pos) {
  if (const auto* t = std::get_if<TensorElement>(&v)) {
    if (k < 0) throw DomainError("negative power of a tensor (at " + std::to_string(pos) + ")");
    return power(*t, k);
  }
  const Element& x = std::get<Element>(v);
  if (k >= 0) return power(x, k);
  if (is_scalar(x) && !x.is_zero()) {
    if (auto inv = scalar_part(x).inverse()) return Element::constant(x.n(), inv->pow(-k));
  }
  throw DomainError("negative power of a non-unit (at " + std::to_string(pos) + ")");
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

Value elaborate(const Expr& e, int n) {
  if (n < 1) throw DomainError("algebra parameter must be >= 1");
  using K = Expr::Kind;
  switch (e.kind) {
    case K::alpha:
      return Element::alpha(n);
    case K::beta:
      return Element::beta(n);
    case K::gamma:
      if (n == 1) {
        throw DomainError("gt requires n >= 2; use bt in the base algebra (at " +
                          std::to_string(e.position) + ")");
      }
      return Element::gamma(n);
    case K::t:
      return Element::constant(n, Scalar::t_power(n, 1));
    case K::zeta:
      return Element::constant(n, Scalar::root_of_unity(n, 1));
    case K::q:
      return Element::constant(n, Scalar::q(n));
    case K::rational:
      return Element::constant(n, Scalar::constant(n, e.value));
    case K::star: {
      const Value v = elaborate(*e.args[0], n);
      if (const auto* t = std::get_if<TensorElement>(&v)) return legwise_star(*t);
      return star(std::get<Element>(v));
    }
    case K::power:
      return raise(elaborate(*e.args[0], n), e.exponent, e.position);
    case K::product: {
      Value acc = elaborate(*e.args[0], n);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = multiply(acc, elaborate(*e.args[i], n), e.args[i]->position);
      return acc;
    }
    case K::sum: {
      Value acc = elaborate(*e.args[0], n);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = add(acc, elaborate(*e.args[i], n), e.args[i]->position);
      return acc;
    }
    case K::negate: {
      const Value v = elaborate(*e.args[0], n);
      if (const auto* t = std::get_if<TensorElement>(&v)) return -*t;
      return -std::get<Element>(v);
    }
    case K::tensor: {
      const Value l = elaborate(*e.args[0], n);
      const Value r = elaborate(*e.args[1], n);
      if (l.index() != 0 || r.index() != 0) {
        throw DomainError("tensor legs must be elements (at " + std::to_string(e.position) + ")");
      }
      return tensor(std::get<Element>(l), std::get<Element>(r));
    }
  }
  throw DomainError("unknown expression node");
}

Value parse_value(const std::string& text, int n) { return elaborate(*parse(text), n); }

Element parse_element(const std::string& text, int n) {
  Value v = parse_value(text, n);
  if (auto* x = std::get_if<Element>(&v)) return std::move(*x);
  throw DomainError("expected an element, got a tensor");
}

TensorElement parse_tensor(const std::string& text, int n) {
  Value v = parse_value(text, n);
  if (auto* t = std::get_if<TensorElement>(&v)) return std::move(*t);
  throw DomainError("expected a tensor, got an element");
}

}  // namespace qcov
