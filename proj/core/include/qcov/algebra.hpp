#pragma once

// Normal-form *-algebra A_n generated by alpha, alpha*, gamma, gamma*.
//
// A_1 is the polynomial algebra of SU_q(2) with gamma = beta.  For n > 1,
// gamma plays the n-th root of beta, so beta is sugar for gamma^n.  Words are
// kept in the normal order alpha^{+-k} gamma^g gamma*^gs; the rewriting rules
// are
//
//   gamma* gamma -> gamma gamma*
//   gamma alpha  -> t^-1 alpha gamma,   gamma* alpha  -> t^-1 alpha gamma*
//   gamma alpha* -> t alpha* gamma,     gamma* alpha* -> t alpha* gamma*
//   alpha alpha* -> 1 - t^{2n} gamma^n gamma*^n
//   alpha* alpha -> 1 - gamma^n gamma*^n
//
// with t = q^(1/n).  Coefficients may live in a larger ring R_order (n must
// divide order); then the per-letter commutation factor is t^{order/n}.

#include <compare>
#include <cstdlib>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "qcov/scalar.hpp"

namespace qcov {

struct Word {
  int apow = 0;  // k >= 0: alpha^k, k < 0: alpha*^{-k}
  int g = 0;
  int gs = 0;

  int degree() const { return g - gs; }
  int length() const { return std::abs(apow) + g + gs; }
  bool is_identity() const { return apow == 0 && g == 0 && gs == 0; }
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Commutation law used by the word multiplier.  The default is the algebra;
/// gamma_alpha_sign = +1 swaps in a wrong rule and exists for negative controls.
struct RewriteRules {
  int gamma_alpha_sign = -1;
};

/// Normal form of lhs * rhs in A_n with coefficients in R_order.
std::vector<std::pair<Word, Scalar>> multiply_words(int n, int order, const Word& lhs,
                                                    const Word& rhs,
                                                    const RewriteRules& rules = {});

/// Normal form of (word)^*, paired with its scalar factor.
std::pair<Word, Scalar> star_word(int n, int order, const Word& w);

class Element {
 public:
  using TermMap = std::map<Word, Scalar>;

  explicit Element(int n) : Element(n, n) {}
  Element(int n, int order);

  static Element unit(int n, int order);
  static Element unit(int n) { return unit(n, n); }
  static Element constant(int n, const Scalar& c);
  static Element monomial(int n, const Word& w, const Scalar& c);
  static Element monomial(int n, const Word& w) { return monomial(n, w, Scalar::one(n)); }

  static Element alpha(int n, int order);
  static Element alpha_star(int n, int order);
  static Element gamma(int n, int order);
  static Element gamma_star(int n, int order);
  /// beta = gamma^n
  static Element beta(int n, int order);
  static Element beta_star(int n, int order);
  static Element alpha(int n) { return alpha(n, n); }
  static Element alpha_star(int n) { return alpha_star(n, n); }
  static Element gamma(int n) { return gamma(n, n); }
  static Element gamma_star(int n) { return gamma_star(n, n); }
  static Element beta(int n) { return beta(n, n); }
  static Element beta_star(int n) { return beta_star(n, n); }

  int n() const { return n_; }
  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;
  /// Largest word length, 0 for the zero element.
  int max_length() const;

  void add(const Word& w, const Scalar& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& c);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element x) { return x *= c; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) {
    return a.n_ == b.n_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_ring(const Element& other) const;

  int n_;
  int order_;
  TermMap terms_;
};

Element mul(const Element& x, const Element& y, const RewriteRules& rules = {});
Element power(const Element& x, int k);

/// Antilinear antihomomorphism.
Element star(const Element& x);

/// Coefficients lifted into R_order (n must divide order).
Element lift_order(const Element& x, int order);

/// *-homomorphism A_1 -> A_n: alpha -> alpha, beta -> gamma^n.  Coefficients
/// are lifted so that q keeps its meaning.
Element embed_base(const Element& a, int target_n);

/// Partial inverse of embed_base: succeeds iff every gamma exponent is a
/// multiple of n.  The result keeps the coefficient ring of x.
std::optional<Element> pullback_base(const Element& x);

/// Splits by word degree g - gs.
std::map<int, Element> grade(const Element& x);

/// Multiplies the degree-j component by u^j.
Element u1_act(const Element& x, const Scalar& u);

/// Canonical text form (see format.hpp).
std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace qcov
