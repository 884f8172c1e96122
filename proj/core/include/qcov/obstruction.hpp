#pragma once

// Graded replay of the obstruction to lifting the comultiplication to the
// covering algebra.  Candidates for the image of gamma inside D = A_n (x) A_n
// are given by their Z x Z graded components; their n-th power is compared
// against delta(beta) = gamma^n (x) alpha + alpha* (x) gamma^n.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcov/tensor.hpp"

namespace qcov {

using Grade = std::pair<int, int>;

class GradedCandidate {
 public:
  explicit GradedCandidate(int n);

  /// Splits a tensor with both legs in A_n into its graded components.
  static GradedCandidate from_tensor(const TensorElement& x);
  /// lambda alpha* (x) gamma + mu gamma (x) alpha.
  static GradedCandidate canonical(int n, const Scalar& lambda, const Scalar& mu);
  static GradedCandidate canonical(int n);

  int n() const { return n_; }
  const std::map<Grade, TensorElement>& components() const { return components_; }
  /// Zero TensorElement when the grade is not in the support.
  TensorElement component(const Grade& g) const;
  TensorElement total() const;

  /// Sets the component of grade g; x must be homogeneous of that grade.
  void set(const Grade& g, const TensorElement& x);

 private:
  int n_;
  std::map<Grade, TensorElement> components_;
};

TensorElement target(int n);

struct GradeMismatch {
  Grade grade;
  TensorElement expected;
  TensorElement actual;
};

struct DeductionStep {
  std::string name;
  bool fired = false;
  std::string detail;
};

struct ObstructionReport {
  enum class Verdict { obstructed, satisfied };

  int n = 1;
  Verdict verdict = Verdict::satisfied;
  TensorElement target_value{{1, 1}, 1};
  TensorElement power_value{{1, 1}, 1};
  std::vector<GradeMismatch> mismatches;
  std::vector<DeductionStep> steps;
  Grade witness_grade{1, 0};
  TensorElement cross_term_value{{1, 1}, 1};
  /// Cross term divided by a01^{n-1} a10 when that product is a single
  /// unit-coefficient tensor; the classical count n at t = 1.
  std::optional<Scalar> witness_coefficient;

  const char* verdict_name() const {
    return verdict == Verdict::obstructed ? "obstructed" : "satisfied";
  }
};

/// X^n split by grade.
std::map<Grade, TensorElement> graded_power(const GradedCandidate& x);

ObstructionReport power_compare(const GradedCandidate& x);

/// The deduction chain on a concrete candidate: support bounds, a00 and a11.
std::vector<DeductionStep> support_constraints(const GradedCandidate& x);

/// Grade (1, n-1) component of X^n.
TensorElement cross_term(const GradedCandidate& x);

/// Cross term divided by the reference ordering a01^{n-1} a10, if defined.
std::optional<Scalar> witness_coefficient(const GradedCandidate& x);

/// Default unit family {1, -1, zeta, t, zeta t} at order n.
std::vector<Scalar> default_units(int n);

struct SweepItem {
  Scalar lambda;
  Scalar mu;
  ObstructionReport report;
};

/// power_compare over every (lambda, mu) pair drawn from units.
std::vector<SweepItem> scalar_sweep(int n, const std::vector<Scalar>& units);

}  // namespace qcov
