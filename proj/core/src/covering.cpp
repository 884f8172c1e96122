#include "qcov/covering.hpp"

#include "qcov/format.hpp"
#include "qcov/random.hpp"

namespace qcov {

namespace {

int mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

void check_cover(int n) {
  if (n < 1) throw DomainError("covering parameter must be >= 1");
}

Element gamma_power(int n, int order, int j) {
  return Element::monomial(n, Word{0, j, 0}, Scalar::one(order));
}

template <std::size_t Legs>
void diff_into(CheckReport& report, const Tensor<Legs>& lhs, const Tensor<Legs>& rhs,
               const std::string& prefix) {
  const Tensor<Legs> d = lhs - rhs;
  for (const auto& term : term_strings(d)) report.fail(prefix + term);
}

}  // namespace

DeckElement::DeckElement(int n_, int m_) : n(n_), m(0) {
  check_cover(n_);
  m = mod(m_, n_);
}

DeckElement DeckElement::compose(const DeckElement& other) const {
  if (other.n != n) throw DomainError("deck elements of different groups");
  return DeckElement(n, m + other.m);
}

ModuleVector::ModuleVector(int n_) : n(n_) {
  check_cover(n_);
  for (int j = 0; j < n_; ++j) slots.emplace_back(1, n_);
}

Element deck_act(const DeckElement& g, const Element& x) {
  if (g.n != x.n()) throw DomainError("deck element and element belong to different coverings");
  const int s = x.order() / x.n();
  Element out(x.n(), x.order());
  for (const auto& [w, c] : x.terms()) {
    out.add(w, c * Scalar::root_of_unity(x.order(), s * g.m * w.degree()));
  }
  return out;
}

std::map<int, Element> isotypic(const Element& x) {
  std::map<int, Element> out;
  for (const auto& [w, c] : x.terms()) {
    auto it = out.try_emplace(mod(w.degree(), x.n()), x.n(), x.order()).first;
    it->second.add(w, c);
  }
  return out;
}

bool is_invariant(const Element& x) {
  for (const auto& [w, c] : x.terms()) {
    if (mod(w.degree(), x.n()) != 0) return false;
  }
  return true;
}

CheckReport action_properties(int n, std::mt19937_64& rng, int count) {
  CheckReport report{"action_properties"};
  for (int i = 0; i < count; ++i) {
    const Element x = random_element(rng, n);
    for (int m = 0; m < n; ++m) {
      const DeckElement g(n, m);
      const Element lhs = deck_act(g, star(x));
      const Element rhs = star(deck_act(g, x));
      if (!(lhs == rhs)) report.fail("involutivity fails on " + to_string(x));
    }
  }
  const Element witness = Element::gamma(n);
  for (int m = 1; m < n; ++m) {
    if (deck_act(DeckElement(n, m), witness) == witness) {
      report.fail("gamma is fixed by g = " + std::to_string(m));
    }
  }
  if (!(deck_act(DeckElement(n, 0), witness) == witness)) {
    report.fail("identity deck element moves gamma");
  }
  report.notes.push_back("non-degeneracy witness: " + to_string(witness));
  return report;
}

bool in_free_module(const Element& x) {
  for (const auto& [w, c] : x.terms()) {
    if (w.gs % x.n() != 0) return false;
  }
  return true;
}

ModuleVector decompose(const Element& x) {
  const int n = x.n();
  ModuleVector v(n);
  for (auto& slot : v.slots) slot = Element(1, x.order());
  for (const auto& [w, c] : x.terms()) {
    if (w.gs % n != 0) {
      throw DomainError("not in M[gt]: word " + word_string(w, n) +
                        " has a gamma* exponent that is not a multiple of n");
    }
    v.slots[w.g % n].add(Word{w.apow, w.g / n, w.gs / n}, c);
  }
  return v;
}

Element assemble(const ModuleVector& v) {
  if (static_cast<int>(v.slots.size()) != v.n) throw DomainError("module vector has wrong rank");
  int order = v.n;
  for (const auto& slot : v.slots) order = lcm_order(order, slot.order());
  Element out(v.n, order);
  for (int j = 0; j < v.n; ++j) {
    const Element& slot = v.slots[j];
    if (slot.n() != 1) throw DomainError("module vector slots must be base elements");
    out += lift_order(embed_base(slot, v.n), order) * gamma_power(v.n, order, j);
  }
  return out;
}

Element twist(const Element& a, int j, int n) {
  if (a.n() != 1) throw DomainError("twist expects a base element");
  const int order = lcm_order(a.order(), n);
  const int s = order / n;
  Element out(1, order);
  for (const auto& [w, c] : a.terms()) {
    out.add(w, c.lift(order) * Scalar::t_power(order, -j * w.apow * s));
  }
  return out;
}

ModuleVector module_multiply(const ModuleVector& v, const ModuleVector& w) {
  if (v.n != w.n) throw DomainError("module vectors of different coverings");
  const int n = v.n;
  int order = n;
  for (const auto& s : v.slots) order = lcm_order(order, s.order());
  for (const auto& s : w.slots) order = lcm_order(order, s.order());
  ModuleVector out(n);
  for (auto& slot : out.slots) slot = Element(1, order);
  const Element beta = Element::beta(1, order);
  for (int j = 0; j < n; ++j) {
    const Element a = lift_order(v.slots[j], order);
    for (int k = 0; k < n; ++k) {
      const Element b = twist(lift_order(w.slots[k], order), j, n);
      out.slots[(j + k) % n] += a * b * power(beta, (j + k) / n);
    }
  }
  return out;
}

Element inner_product(const Element& x, const Element& y) {
  if (x.n() != y.n() || x.order() != y.order()) {
    throw DomainError("inner product arguments live in different algebras");
  }
  const Element p = star(x) * y;
  Element out(x.n(), x.order());
  for (int m = 0; m < x.n(); ++m) out += deck_act(DeckElement(x.n(), m), p);
  return out;
}

TensorElement delta_R(const ModuleVector& v) {
  int order = v.n;
  for (const auto& s : v.slots) order = lcm_order(order, s.order());
  TensorElement out({1, v.n}, order);
  for (int j = 0; j < v.n; ++j) {
    TensorElement shift({1, v.n}, order);
    shift.add({Word{}, Word{0, j, 0}}, Scalar::one(order));
    out += delta(lift_order(v.slots[j], order)) * shift;
  }
  return out;
}

TensorElement delta_L(const ModuleVector& v) {
  int order = v.n;
  for (const auto& s : v.slots) order = lcm_order(order, s.order());
  TensorElement out({v.n, 1}, order);
  for (int j = 0; j < v.n; ++j) {
    TensorElement shift({v.n, 1}, order);
    shift.add({Word{0, j, 0}, Word{}}, Scalar::one(order));
    out += delta(lift_order(v.slots[j], order)) * shift;
  }
  return out;
}

TensorElement delta_R(const Element& x) { return delta_R(decompose(x)); }
TensorElement delta_L(const Element& x) { return delta_L(decompose(x)); }

TensorElement deck_act_leg(const DeckElement& g, const TensorElement& x, std::size_t leg) {
  if (leg > 1) throw DomainError("tensor leg index out of range");
  const int n_leg = x.legs()[leg];
  if (n_leg != g.n) throw DomainError("deck element does not act on this tensor leg");
  const int s = x.order() / n_leg;
  TensorElement out(x.legs(), x.order());
  for (const auto& [k, c] : x.terms()) {
    out.add(k, c * Scalar::root_of_unity(x.order(), s * g.m * k[leg].degree()));
  }
  return out;
}

CheckReport coaction_check(const ModuleVector& v) {
  CheckReport report{"coaction"};
  const TensorElement dr = delta_R(v);
  const int order = dr.order();
  TripleTensor lhs_r({1, 1, v.n}, order);
  TripleTensor rhs_r({1, 1, v.n}, order);
  for (const auto& [k, c] : dr.terms()) {
    lhs_r += c * outer(delta_word(k[0], order), as_tensor(Element::monomial(v.n, k[1], Scalar::one(order))));
    rhs_r += c * outer(as_tensor(Element::monomial(1, k[0], Scalar::one(order))),
                       delta_R(Element::monomial(v.n, k[1], Scalar::one(order))));
  }
  diff_into(report, lhs_r, rhs_r, "delta_R: ");

  const TensorElement dl = delta_L(v);
  TripleTensor lhs_l({v.n, 1, 1}, order);
  TripleTensor rhs_l({v.n, 1, 1}, order);
  for (const auto& [k, c] : dl.terms()) {
    lhs_l += c * outer(as_tensor(Element::monomial(v.n, k[0], Scalar::one(order))),
                       delta_word(k[1], order));
    rhs_l += c * outer(delta_L(Element::monomial(v.n, k[0], Scalar::one(order))),
                       as_tensor(Element::monomial(1, k[1], Scalar::one(order))));
  }
  diff_into(report, lhs_l, rhs_l, "delta_L: ");
  return report;
}

CheckReport equivariance_check(const ModuleVector& v) {
  CheckReport report{"equivariance"};
  const Element x = assemble(v);
  const TensorElement dr = delta_R(v);
  const TensorElement dl = delta_L(v);
  for (int m = 0; m < v.n; ++m) {
    const DeckElement g(v.n, m);
    const ModuleVector gv = decompose(deck_act(g, x));
    diff_into(report, delta_R(gv), deck_act_leg(g, dr, 1), "delta_R g=" + std::to_string(m) + ": ");
    diff_into(report, delta_L(gv), deck_act_leg(g, dl, 0), "delta_L g=" + std::to_string(m) + ": ");
  }
  return report;
}

LinearityReport linearity_report(const ModuleVector& v, const Element& a, const Element& b) {
  const Element x = assemble(v);
  const int order = x.order();
  const Element ea = lift_order(embed_base(a, v.n), order);
  const Element eb = lift_order(embed_base(b, v.n), order);
  const TensorElement da = delta(lift_order(a, lcm_order(a.order(), order)));
  const TensorElement db = delta(lift_order(b, lcm_order(b.order(), order)));

  LinearityReport out{CheckReport{"left_linearity_delta_L"}, CheckReport{"left_linearity_delta_R"},
                      TensorElement({v.n, 1}, order)};
  const ModuleVector av = decompose(ea * x);
  diff_into(out.left, delta_L(av), da * delta_L(v), "");
  diff_into(out.left_R, delta_R(av), da * delta_R(v), "");
  const ModuleVector vb = decompose(x * eb);
  out.right_residual = delta_L(vb) - delta_L(v) * db;
  return out;
}

}  // namespace qcov
