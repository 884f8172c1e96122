#pragma once

// Tensor powers of the normal-form algebras.  Every leg carries its own
// algebra parameter (1 for the base algebra, n for the covering), all legs
// share one coefficient ring, and the product is legwise with no interchange
// sign.

#include <array>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qcov/algebra.hpp"

namespace qcov {

template <std::size_t Legs>
class Tensor {
 public:
  using Key = std::array<Word, Legs>;
  using TermMap = std::map<Key, Scalar>;
  using LegParams = std::array<int, Legs>;

  Tensor(LegParams legs, int order) : legs_(legs), order_(order) {
    for (int n : legs_) {
      if (n < 1 || order % n != 0) throw DomainError("tensor leg parameter incompatible with order");
    }
    Scalar probe(order);
    (void)probe;
  }

  const LegParams& legs() const { return legs_; }
  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(order_) : it->second;
  }

  void add(const Key& k, const Scalar& c) {
    if (c.order() != order_) throw DomainError("tensor coefficient order mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other) { return *this += -other; }
  Tensor& operator*=(const Scalar& c) {
    TermMap out;
    for (const auto& [k, v] : terms_) {
      Scalar p = v * c;
      if (!p.is_zero()) out.emplace(k, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
  }
  Tensor operator-() const {
    Tensor out = *this;
    for (auto& [k, v] : out.terms_) v = -v;
    return out;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& c, Tensor t) { return t *= c; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.legs_ == b.legs_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  LegParams legs_;
  int order_;
  TermMap terms_;
};

using TensorElement = Tensor<2>;
using TripleTensor = Tensor<3>;

/// Rewrites base legs (parameter 1) as embedded words of the requested legs and
/// lifts the coefficients so that q keeps its meaning.
template <std::size_t Legs>
Tensor<Legs> promote(const Tensor<Legs>& x, const std::array<int, Legs>& legs, int order = 0) {
  int target = order == 0 ? x.order() : order;
  for (std::size_t i = 0; i < Legs; ++i) {
    if (x.legs()[i] != legs[i] && x.legs()[i] != 1) {
      throw DomainError("cannot promote tensor leg with parameter " +
                        std::to_string(x.legs()[i]) + " to " + std::to_string(legs[i]));
    }
    target = lcm_order(target, legs[i]);
  }
  if (legs == x.legs() && target == x.order()) return x;
  Tensor<Legs> out(legs, target);
  for (const auto& [k, c] : x.terms()) {
    auto key = k;
    for (std::size_t i = 0; i < Legs; ++i) {
      if (x.legs()[i] != legs[i]) {
        key[i].g *= legs[i];
        key[i].gs *= legs[i];
      }
    }
    out.add(key, c.lift(target));
  }
  return out;
}

namespace detail {

template <std::size_t Legs>
std::pair<std::array<int, Legs>, int> common_ring(const Tensor<Legs>& a, const Tensor<Legs>& b) {
  std::array<int, Legs> legs{};
  int order = lcm_order(a.order(), b.order());
  for (std::size_t i = 0; i < Legs; ++i) {
    const int la = a.legs()[i];
    const int lb = b.legs()[i];
    if (la != lb && la != 1 && lb != 1) {
      throw DomainError("tensor legs " + std::to_string(la) + " and " + std::to_string(lb) +
                        " are incompatible");
    }
    legs[i] = std::max(la, lb);
    order = lcm_order(order, legs[i]);
  }
  return {legs, order};
}

template <std::size_t Legs>
void accumulate_product(Tensor<Legs>& out, const typename Tensor<Legs>::Key& lhs,
                        const typename Tensor<Legs>::Key& rhs, const Scalar& coeff,
                        const RewriteRules& rules) {
  std::array<std::vector<std::pair<Word, Scalar>>, Legs> legwise;
  for (std::size_t i = 0; i < Legs; ++i) {
    legwise[i] = multiply_words(out.legs()[i], out.order(), lhs[i], rhs[i], rules);
  }
  typename Tensor<Legs>::Key key;
  auto recurse = [&](auto&& self, std::size_t leg, const Scalar& acc) -> void {
    if (leg == Legs) {
      out.add(key, acc);
      return;
    }
    for (const auto& [w, f] : legwise[leg]) {
      key[leg] = w;
      self(self, leg + 1, acc * f);
    }
  };
  recurse(recurse, 0, coeff);
}

}  // namespace detail

template <std::size_t Legs>
Tensor<Legs>& Tensor<Legs>::operator+=(const Tensor& other) {
  if (other.legs_ != legs_ || other.order_ != order_) {
    auto [legs, order] = detail::common_ring(*this, other);
    *this = promote(*this, legs, order);
    const Tensor rhs = promote(other, legs, order);
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
  }
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

/// Legwise product; base legs are promoted when the other factor carries a
/// covering leg in the same slot.
template <std::size_t Legs>
Tensor<Legs> mul(const Tensor<Legs>& a, const Tensor<Legs>& b, const RewriteRules& rules = {}) {
  auto [legs, order] = detail::common_ring(a, b);
  const Tensor<Legs> lhs = promote(a, legs, order);
  const Tensor<Legs> rhs = promote(b, legs, order);
  Tensor<Legs> out(legs, order);
  for (const auto& [ka, ca] : lhs.terms()) {
    for (const auto& [kb, cb] : rhs.terms()) {
      detail::accumulate_product(out, ka, kb, ca * cb, rules);
    }
  }
  return out;
}

template <std::size_t Legs>
Tensor<Legs> operator*(const Tensor<Legs>& a, const Tensor<Legs>& b) {
  return mul(a, b);
}

template <std::size_t Legs>
Tensor<Legs> power(const Tensor<Legs>& x, int k) {
  if (k < 0) throw DomainError("negative tensor power");
  Tensor<Legs> out(x.legs(), x.order());
  typename Tensor<Legs>::Key unit{};
  out.add(unit, Scalar::one(x.order()));
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

template <std::size_t A, std::size_t B>
Tensor<A + B> outer(const Tensor<A>& a, const Tensor<B>& b) {
  if (a.order() != b.order()) throw DomainError("outer product order mismatch");
  std::array<int, A + B> legs{};
  for (std::size_t i = 0; i < A; ++i) legs[i] = a.legs()[i];
  for (std::size_t i = 0; i < B; ++i) legs[A + i] = b.legs()[i];
  Tensor<A + B> out(legs, a.order());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      typename Tensor<A + B>::Key key;
      for (std::size_t i = 0; i < A; ++i) key[i] = ka[i];
      for (std::size_t i = 0; i < B; ++i) key[A + i] = kb[i];
      out.add(key, ca * cb);
    }
  }
  return out;
}

Tensor<1> as_tensor(const Element& x);
Element as_element(const Tensor<1>& x);

/// x (x) y; coefficient rings are unified first.
TensorElement tensor(const Element& x, const Element& y);

template <std::size_t Legs>
Tensor<Legs> legwise_star(const Tensor<Legs>& x) {
  Tensor<Legs> out(x.legs(), x.order());
  for (const auto& [k, c] : x.terms()) {
    typename Tensor<Legs>::Key key;
    Scalar f = c.conj();
    for (std::size_t i = 0; i < Legs; ++i) {
      auto [w, s] = star_word(x.legs()[i], x.order(), k[i]);
      key[i] = w;
      f *= s;
    }
    out.add(key, f);
  }
  return out;
}

/// Comultiplication of the base algebra: alpha -> alpha(x)alpha - q beta*(x)beta,
/// beta -> beta(x)alpha + alpha*(x)beta, extended as a unital *-homomorphism.
TensorElement delta(const Element& a);
TensorElement delta_word(const Word& w, int order);

/// Splits by (degree of left word, degree of right word).
std::map<std::pair<int, int>, TensorElement> zz_grade(const TensorElement& x);

struct RelationResidual {
  std::string relation;
  TensorElement residual;
};

/// Five defining relations of SU_q(2) as LHS - RHS elements of the base algebra.
std::vector<std::pair<std::string, Element>> su_q2_relations(int order = 1);

/// Applies delta to each defining relation; every residual must be zero.
std::vector<RelationResidual> delta_respects_relations(int order = 1);

struct CoassocResult {
  TripleTensor left;   // (delta (x) id) delta a
  TripleTensor right;  // (id (x) delta) delta a
  bool equal() const { return left == right; }
};

CoassocResult coassoc_check(const Element& a);

template <std::size_t Legs>
std::ostream& operator<<(std::ostream& os, const Tensor<Legs>& x);

}  // namespace qcov
