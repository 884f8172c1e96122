#pragma once

// The n-fold covering structure on A_n: the Z_n deck action, the free module
// M = sum_j A gamma^j, the A-valued inner product, and the one-leg coactions
// delta_L / delta_R.

#include <random>
#include <string>
#include <vector>

#include "qcov/algebra.hpp"
#include "qcov/report.hpp"
#include "qcov/tensor.hpp"

namespace qcov {

struct DeckElement {
  int n = 1;
  int m = 0;  // representative in [0, n)

  DeckElement(int n_, int m_);
  DeckElement compose(const DeckElement& other) const;
  bool is_identity() const { return m == 0; }
};

/// Sum_j embed(slots[j]) gamma^j.  Slots are base elements whose coefficients
/// live in R_n (t = q^(1/n)).
struct ModuleVector {
  int n = 1;
  std::vector<Element> slots;

  explicit ModuleVector(int n_);
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

/// Multiplies each word by zeta^{m (g - gs)}.
Element deck_act(const DeckElement& g, const Element& x);

/// Components by (g - gs) mod n.
std::map<int, Element> isotypic(const Element& x);
bool is_invariant(const Element& x);

/// Involutivity on random elements and the non-degeneracy witness gamma.
CheckReport action_properties(int n, std::mt19937_64& rng, int count = 100);

bool in_free_module(const Element& x);
ModuleVector decompose(const Element& x);
Element assemble(const ModuleVector& v);

/// sigma^j with gamma^j embed(a) = embed(sigma^j a) gamma^j; the base element a
/// may carry R_1 or R_n coefficients, the result carries R_n.
Element twist(const Element& a, int j, int n);

/// Product inside M computed slotwise through twist.
ModuleVector module_multiply(const ModuleVector& v, const ModuleVector& w);

/// Sum over the deck group of g(x^* y).
Element inner_product(const Element& x, const Element& y);

/// Left coaction A~ -> A (x) A~ and right coaction A~ -> A~ (x) A.
TensorElement delta_R(const ModuleVector& v);
TensorElement delta_L(const ModuleVector& v);
TensorElement delta_R(const Element& x);
TensorElement delta_L(const Element& x);

/// Applies the deck element to one leg of a tensor.
TensorElement deck_act_leg(const DeckElement& g, const TensorElement& x, std::size_t leg);

CheckReport coaction_check(const ModuleVector& v);
CheckReport equivariance_check(const ModuleVector& v);

struct LinearityReport {
  CheckReport left;      // delta_L(a v) = delta(a) delta_L(v), asserted
  CheckReport left_R;    // delta_R(a v) = delta(a) delta_R(v), asserted
  TensorElement right_residual;  // delta_L(v b) - delta_L(v) delta(b), reported only
};

LinearityReport linearity_report(const ModuleVector& v, const Element& a, const Element& b);

}  // namespace qcov
