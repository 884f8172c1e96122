#include "qcov/algebra.hpp"

#include <algorithm>

namespace qcov {

namespace {

void check_params(int n, int order) {
  if (n < 1) throw DomainError("algebra parameter must be >= 1");
  if (order % n != 0) {
    throw DomainError("coefficient order " + std::to_string(order) +
                      " is not a multiple of n = " + std::to_string(n));
  }
}

// Coefficients of prod_i (1 - u_i P) as a polynomial in P.
std::vector<Scalar> expand_contraction(int order, const std::vector<int>& texps) {
  std::vector<Scalar> poly{Scalar::one(order)};
  for (int e : texps) {
    std::vector<Scalar> next(poly.size() + 1, Scalar(order));
    const Scalar u = Scalar::t_power(order, e);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] -= u * poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

std::vector<std::pair<Word, Scalar>> multiply_words(int n, int order, const Word& lhs,
                                                    const Word& rhs, const RewriteRules& rules) {
  check_params(n, order);
  const int s = order / n;  // t_n = t^s
  const int block = lhs.g + lhs.gs;

  // Move the gamma block of lhs to the right across alpha^{rhs.apow}.
  int texp = 0;
  if (rhs.apow > 0) {
    texp = rules.gamma_alpha_sign * rhs.apow * block * s;
  } else if (rhs.apow < 0) {
    texp = -rhs.apow * block * s;
  }

  const int g = lhs.g + rhs.g;
  const int gs = lhs.gs + rhs.gs;
  const int a = lhs.apow;
  const int b = rhs.apow;

  std::vector<std::pair<Word, Scalar>> out;
  if (a == 0 || b == 0 || (a > 0) == (b > 0)) {
    out.emplace_back(Word{a + b, g, gs}, Scalar::t_power(order, texp));
    return out;
  }

  // Contract alpha^k alpha*^m (or alpha*^k alpha^m) one pair at a time.
  // P = gamma^n gamma*^n satisfies P alpha* = t^{2ns} alpha* P and
  // P alpha = t^{sign 2ns} alpha P.
  const int k = std::abs(a);
  const int m = std::abs(b);
  const int r = std::min(k, m);
  const int rest = a + b;  // leftover signed alpha exponent
  const int base = m - r;
  std::vector<int> factor_texps;
  factor_texps.reserve(r);
  if (a > 0) {
    for (int i = base + 1; i <= m; ++i) factor_texps.push_back(2 * n * s * i);
  } else {
    const int c = rules.gamma_alpha_sign * 2 * n * s;
    for (int i = base + 1; i <= m; ++i) factor_texps.push_back(c * (i - 1));
  }
  const auto poly = expand_contraction(order, factor_texps);
  const Scalar front = Scalar::t_power(order, texp);
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j].is_zero()) continue;
    const int p = static_cast<int>(j) * n;
    out.emplace_back(Word{rest, g + p, gs + p}, front * poly[j]);
  }
  return out;
}

std::pair<Word, Scalar> star_word(int n, int order, const Word& w) {
  check_params(n, order);
  const int s = order / n;
  // (alpha^a gamma^g gamma*^gs)^* = gamma^gs gamma*^g alpha^{-a}
  return {Word{-w.apow, w.gs, w.g}, Scalar::t_power(order, w.apow * (w.g + w.gs) * s)};
}

Element::Element(int n, int order) : n_(n), order_(order) {
  check_params(n, order);
  Scalar probe(order);  // validates the order range
  (void)probe;
}

Element Element::unit(int n, int order) {
  Element e(n, order);
  e.add(Word{}, Scalar::one(order));
  return e;
}

Element Element::constant(int n, const Scalar& c) {
  Element e(n, c.order());
  e.add(Word{}, c);
  return e;
}

Element Element::monomial(int n, const Word& w, const Scalar& c) {
  if (w.g < 0 || w.gs < 0) throw DomainError("negative gamma exponent");
  Element e(n, c.order());
  e.add(w, c);
  return e;
}

Element Element::alpha(int n, int order) {
  return monomial(n, Word{1, 0, 0}, Scalar::one(order));
}
Element Element::alpha_star(int n, int order) {
  return monomial(n, Word{-1, 0, 0}, Scalar::one(order));
}
Element Element::gamma(int n, int order) {
  return monomial(n, Word{0, 1, 0}, Scalar::one(order));
}
Element Element::gamma_star(int n, int order) {
  return monomial(n, Word{0, 0, 1}, Scalar::one(order));
}
Element Element::beta(int n, int order) {
  return monomial(n, Word{0, n, 0}, Scalar::one(order));
}
Element Element::beta_star(int n, int order) {
  return monomial(n, Word{0, 0, n}, Scalar::one(order));
}

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(order_) : it->second;
}

int Element::max_length() const {
  int len = 0;
  for (const auto& [w, c] : terms_) len = std::max(len, w.length());
  return len;
}

void Element::add(const Word& w, const Scalar& c) {
  if (c.order() != order_) throw DomainError("coefficient order mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_same_ring(const Element& other) const {
  if (n_ != other.n_ || order_ != other.order_) {
    throw DomainError("algebra parameter mismatch (n=" + std::to_string(n_) + "/" +
                      std::to_string(other.n_) + ", order=" + std::to_string(order_) + "/" +
                      std::to_string(other.order_) + ")");
  }
}

Element& Element::operator+=(const Element& other) {
  check_same_ring(other);
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same_ring(other);
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.order() != order_) throw DomainError("coefficient order mismatch");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap out;
  for (const auto& [w, v] : terms_) {
    Scalar p = v * c;
    if (!p.is_zero()) out.emplace(w, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

Element mul(const Element& x, const Element& y, const RewriteRules& rules) {
  if (x.n() != y.n() || x.order() != y.order()) {
    throw DomainError("algebra parameter mismatch in product");
  }
  Element out(x.n(), x.order());
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      const Scalar c = cx * cy;
      for (const auto& [w, f] : multiply_words(x.n(), x.order(), wx, wy, rules)) {
        out.add(w, c * f);
      }
    }
  }
  return out;
}

Element operator*(const Element& a, const Element& b) { return mul(a, b); }

Element power(const Element& x, int k) {
  if (k < 0) throw DomainError("negative power of an algebra element");
  Element out = Element::unit(x.n(), x.order());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

Element star(const Element& x) {
  Element out(x.n(), x.order());
  for (const auto& [w, c] : x.terms()) {
    auto [sw, f] = star_word(x.n(), x.order(), w);
    out.add(sw, c.conj() * f);
  }
  return out;
}

Element lift_order(const Element& x, int order) {
  if (order == x.order()) return x;
  Element out(x.n(), order);
  for (const auto& [w, c] : x.terms()) out.add(w, c.lift(order));
  return out;
}

Element embed_base(const Element& a, int target_n) {
  if (a.n() != 1) throw DomainError("embed_base expects a base-algebra element (n = 1)");
  const int order = lcm_order(a.order(), target_n);
  Element out(target_n, order);
  for (const auto& [w, c] : a.terms()) {
    out.add(Word{w.apow, w.g * target_n, w.gs * target_n}, c.lift(order));
  }
  return out;
}

std::optional<Element> pullback_base(const Element& x) {
  const int n = x.n();
  Element out(1, x.order());
  for (const auto& [w, c] : x.terms()) {
    if (w.g % n != 0 || w.gs % n != 0) return std::nullopt;
    out.add(Word{w.apow, w.g / n, w.gs / n}, c);
  }
  return out;
}

std::map<int, Element> grade(const Element& x) {
  std::map<int, Element> out;
  for (const auto& [w, c] : x.terms()) {
    auto it = out.try_emplace(w.degree(), x.n(), x.order()).first;
    it->second.add(w, c);
  }
  return out;
}

Element u1_act(const Element& x, const Scalar& u) {
  Element out(x.n(), x.order());
  for (const auto& [d, part] : grade(x)) {
    out += u.pow(d) * part;
  }
  return out;
}

}  // namespace qcov
