#pragma once

// Truncated operator model of SU_q(2) and its n-fold covering.
//
// The Fock factor is l2(N^0) cut at N states: Q e_k = q^k e_k and
// S e_k = e_{k-1}.  The bilateral shift is replaced by a cyclic unitary Omega
// on C^L, with R = Omega^n so that the n-th root of R is Omega itself.  Basis
// vector e_k (x) e_l sits at index k * L + l.
//
// Truncation only damages states pushed above the top Fock level, so every
// residual is measured on the margin: columns with k <= N - 1 - d for a
// word of length d.

#include <Eigen/SparseCore>

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qcov/algebra.hpp"
#include "qcov/tensor.hpp"

namespace qcov {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

struct MatrixRepConfig {
  double q = 0.5;
  int n = 2;
  int fock = 64;
  int cyclic = 8;
  double tol = 1e-10;
};

class MatrixRep {
 public:
  static MatrixRep build(const MatrixRepConfig& config);
  static MatrixRep build(double q, int n, int fock, int cyclic) {
    return build(MatrixRepConfig{q, n, fock, cyclic});
  }

  const MatrixRepConfig& config() const { return config_; }
  double q() const { return config_.q; }
  int n() const { return config_.n; }
  int fock() const { return config_.fock; }
  int cyclic() const { return config_.cyclic; }
  int dim() const { return config_.fock * config_.cyclic; }

  // Fock and cyclic factors.
  const SparseMatrix& Q() const { return fock_q_; }
  const SparseMatrix& Q_root() const { return fock_q_root_; }
  const SparseMatrix& S() const { return fock_s_; }
  const SparseMatrix& Omega() const { return omega_; }

  const SparseMatrix& identity() const { return identity_; }
  const SparseMatrix& alpha() const { return alpha_; }
  const SparseMatrix& alpha_star() const { return alpha_star_; }
  /// Q (x) Omega^n
  const SparseMatrix& beta() const { return beta_; }
  const SparseMatrix& beta_star() const { return beta_star_; }
  /// Q^(1/n) (x) Omega; gamma of the covering algebra.
  const SparseMatrix& beta_tilde() const { return beta_tilde_; }
  const SparseMatrix& beta_tilde_star() const { return beta_tilde_star_; }
  /// Q (x) Omega
  const SparseMatrix& beta_double_tilde() const { return beta_tt_; }
  const SparseMatrix& beta_double_tilde_star() const { return beta_tt_star_; }

 private:
  MatrixRepConfig config_;
  SparseMatrix fock_q_, fock_q_root_, fock_s_, omega_;
  SparseMatrix identity_, alpha_, alpha_star_, beta_, beta_star_, beta_tilde_, beta_tilde_star_,
      beta_tt_, beta_tt_star_;
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Largest column norm of (a - b) over margin columns for words of length d.
double margin_residual(const MatrixRep& rep, const SparseMatrix& a, const SparseMatrix& b, int d);

/// Words are evaluated as ordered products of the generator matrices; n = 1
/// elements use beta and n = rep.n() elements use beta_tilde.
SparseMatrix eval_word(const MatrixRep& rep, const Word& w, int n);
SparseMatrix eval_element(const MatrixRep& rep, const Element& x);
/// Kronecker product of leg evaluations.
SparseMatrix eval_tensor(const MatrixRep& rep, const TensorElement& x);

struct NumericResidual {
  std::string relation;
  double max_residual = 0.0;
  int margin = 0;  // word length d used for the margin rule
  bool pass = false;
};

/// The five SU_q(2) relations, the same five with beta replaced by Q (x) Omega,
/// the covering commutation rules, and beta_tilde^n = beta.
std::vector<NumericResidual> check_relations(const MatrixRep& rep);

/// Piecewise-linear hat f_k applied to beta beta^* (which is diagonal).
SparseMatrix spectral_projection(const MatrixRep& rep, int k);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // diagonal of beta beta^*, Fock levels, one per level
  bool diagonal = false;            // no off-diagonal entries
  bool exact = false;               // every entry equals q^(2k) bit for bit
  double max_relative_deviation = 0.0;
  double smallest = 0.0;            // tail accumulating at 0
};

SpectrumReport spectrum_check(const MatrixRep& rep);

/// eval(mul(x, y)) against eval(x) eval(y) on count random pairs.
double symbolic_numeric_crosscheck(const MatrixRep& rep, int count, int degree, std::mt19937_64& rng,
                                   const RewriteRules& rules = {});

/// Minimum of v^* M v over margin basis vectors and random unit vectors in the
/// margin subspace.
double min_margin_form(const MatrixRep& rep, const SparseMatrix& m, int d, std::mt19937_64& rng,
                       int random_vectors = 16);

}  // namespace qcov
