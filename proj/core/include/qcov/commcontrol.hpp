#pragma once

// Commutative control: function algebras on finite cyclic groups with the
// covering Z_{mn} -> Z_m and deck group m Z_{mn} of order n.

#include <vector>

#include "qcov/report.hpp"
#include "qcov/scalar.hpp"

namespace qcov {

struct CyclicFun {
  int m = 1;
  std::vector<Scalar> values;

  static CyclicFun delta(int m, int i, int order);
  static CyclicFun constant(int m, const Scalar& c);

  int order() const { return values.empty() ? 1 : values.front().order(); }
  CyclicFun star() const;
  friend CyclicFun operator*(const CyclicFun& a, const CyclicFun& b);
  friend CyclicFun operator+(const CyclicFun& a, const CyclicFun& b);
  friend bool operator==(const CyclicFun&, const CyclicFun&) = default;
};

using FunTable = std::vector<std::vector<Scalar>>;

/// Coefficient ring used by the control: R_{mn} when supported, else Q.
int commcontrol_order(int m, int n);

/// table[x][y] = f(x + y mod m)
FunTable comult(const CyclicFun& f);
CheckReport coassoc_check(const CyclicFun& f);
CheckReport star_check(const CyclicFun& f);

/// Pullback along Z_{mn} -> Z_m.
CyclicFun cover_embed(const CyclicFun& f, int n);
/// (L_h f)(x) = f(x - h); h must be a multiple of m for a deck transformation.
CyclicFun deck_translate(const CyclicFun& f, int h, int base_m);

/// Q-basis of the functions on Z_{mn} fixed by every deck translation.
std::vector<std::vector<Rational>> fixed_basis(int m, int n);
CheckReport fixed_algebra_check(int m, int n);
CheckReport restriction_check(int m, int n);
CheckReport character_check(int m, int n);

struct EquivarianceCase {
  int f_index = 0;  // delta function at this point of Z_{mn}
  int h = 0;
  bool one_leg = false;  // delta(L_h f) = (L_h (x) 1) delta(f)
  bool two_leg = false;  // delta(L_h f) = (L_h (x) L_h) delta(f)
};

struct LemmaReport {
  int m = 1;
  int n = 1;
  std::vector<EquivarianceCase> cases;
  bool one_leg_all = true;
  bool two_leg_all = true;
  std::vector<CheckReport> checks;  // fixed algebra, restriction, coassociativity, characters
  bool checks_pass() const;
};

LemmaReport lemma_equivariance_report(int m, int n);

}  // namespace qcov
