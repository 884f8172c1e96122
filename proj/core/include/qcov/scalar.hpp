#pragma once

// Exact coefficient ring Q(zeta_n)[t, t^-1].
//
// t stands for q^(1/n) and zeta for the principal primitive n-th root of
// unity, so q itself is t^n.  Powers of zeta are always stored reduced modulo
// the n-th cyclotomic polynomial, which makes the term map a canonical form.

#include <gmpxx.h>

#include <complex>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcov {

using Rational = mpq_class;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kMaxOrder = 12;

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_poly(int n);

int euler_phi(int n);

int lcm_order(int a, int b);

struct Monomial {
  int zexp = 0;
  int texp = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Scalar {
 public:
  using TermMap = std::map<Monomial, Rational>;

  /// Zero of R_order.
  explicit Scalar(int order = 1);

  static Scalar zero(int order) { return Scalar(order); }
  static Scalar one(int order) { return constant(order, 1); }
  static Scalar constant(int order, const Rational& r);
  /// r * zeta^zexp * t^texp; zexp may be any integer.
  static Scalar monomial(int order, const Rational& r, int zexp, int texp);
  static Scalar t_power(int order, int k) { return monomial(order, 1, 0, k); }
  static Scalar root_of_unity(int order, int m) { return monomial(order, 1, m, 0); }
  static Scalar q(int order) { return t_power(order, order); }

  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the Scalar is a single rational times t^k (no zeta content).
  bool is_rational_monomial() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Complex conjugation: zeta -> zeta^-1, t fixed (t is a positive real).
  Scalar conj() const;

  /// Inverse for units c * t^k with c a nonzero element of Q(zeta).
  std::optional<Scalar> inverse() const;

  /// Integer power; negative exponents need a unit.
  Scalar pow(int k) const;

  /// Image under R_order -> R_target, t -> t^(target/order), zeta -> zeta^(target/order).
  Scalar lift(int target) const;

  /// Substitutes t = q^(1/order) (positive root) and zeta = exp(2 pi i / order).
  std::complex<double> eval(double q) const;

  std::string to_string() const;

 private:
  void add_reduced(int zexp, int texp, const Rational& r);

  int order_;
  TermMap terms_;
};

std::complex<double> scalar_eval(const Scalar& a, double q);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qcov
