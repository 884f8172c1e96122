#include "qcov/matrep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcov/random.hpp"

namespace qcov {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& t) {
  SparseMatrix m(rows, cols);
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

SparseMatrix diagonal(const std::vector<double>& d) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0.0) t.emplace_back(i, i, d[i]);
  }
  const int n = static_cast<int>(d.size());
  return from_triplets(n, n, t);
}

SparseMatrix sparse_identity(int n) {
  return diagonal(std::vector<double>(n, 1.0));
}

SparseMatrix adjoint(const SparseMatrix& m) { return SparseMatrix(m.adjoint()); }

}  // namespace

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (int ca = 0; ca < a.outerSize(); ++ca) {
    for (SparseMatrix::InnerIterator ia(a, ca); ia; ++ia) {
      for (int cb = 0; cb < b.outerSize(); ++cb) {
        for (SparseMatrix::InnerIterator ib(b, cb); ib; ++ib) {
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
        }
      }
    }
  }
  return from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), t);
}

MatrixRep MatrixRep::build(const MatrixRepConfig& config) {
  if (!(config.q > 0.0 && config.q < 1.0)) throw DomainError("q must lie in (0, 1)");
  if (config.fock < 8) throw DomainError("Fock truncation must be >= 8");
  if (config.cyclic < 2) throw DomainError("cyclic dimension must be >= 2");
  if (config.n < 1) throw DomainError("covering parameter must be >= 1");

  MatrixRep rep;
  rep.config_ = config;
  const int N = config.fock;
  const int L = config.cyclic;
  const double q = config.q;

  std::vector<double> qk(N), qroot(N), lower(N);
  for (int k = 0; k < N; ++k) {
    qk[k] = std::pow(q, k);
    qroot[k] = std::pow(q, static_cast<double>(k) / config.n);
    lower[k] = std::sqrt(1.0 - qk[k] * qk[k]);
  }
  rep.fock_q_ = diagonal(qk);
  rep.fock_q_root_ = diagonal(qroot);

  std::vector<Triplet> s;
  for (int k = 1; k < N; ++k) s.emplace_back(k - 1, k, 1.0);
  rep.fock_s_ = from_triplets(N, N, s);

  std::vector<Triplet> w;
  for (int l = 0; l < L; ++l) w.emplace_back((l + 1) % L, l, 1.0);
  rep.omega_ = from_triplets(L, L, w);

  SparseMatrix omega_n = sparse_identity(L);
  for (int i = 0; i < config.n; ++i) omega_n = SparseMatrix(omega_n * rep.omega_);

  const SparseMatrix fock_alpha = SparseMatrix(rep.fock_s_ * diagonal(lower));
  const SparseMatrix cyc_id = sparse_identity(L);

  rep.identity_ = sparse_identity(N * L);
  rep.alpha_ = kron(fock_alpha, cyc_id);
  rep.alpha_star_ = adjoint(rep.alpha_);
  rep.beta_ = kron(rep.fock_q_, omega_n);
  rep.beta_star_ = adjoint(rep.beta_);
  rep.beta_tilde_ = kron(rep.fock_q_root_, rep.omega_);
  rep.beta_tilde_star_ = adjoint(rep.beta_tilde_);
  rep.beta_tt_ = kron(rep.fock_q_, rep.omega_);
  rep.beta_tt_star_ = adjoint(rep.beta_tt_);
  return rep;
}

double margin_residual(const MatrixRep& rep, const SparseMatrix& a, const SparseMatrix& b, int d) {
  const int top = rep.fock() - 1 - d;
  if (top < 0) throw DomainError("word length exceeds the Fock truncation");
  const SparseMatrix diff = a - b;
  const int limit = (top + 1) * rep.cyclic();
  double worst = 0.0;
  for (int col = 0; col < limit && col < diff.outerSize(); ++col) {
    double sq = 0.0;
    for (SparseMatrix::InnerIterator it(diff, col); it; ++it) sq += std::norm(it.value());
    worst = std::max(worst, std::sqrt(sq));
  }
  return worst;
}

SparseMatrix eval_word(const MatrixRep& rep, const Word& w, int n) {
  const SparseMatrix* g = nullptr;
  const SparseMatrix* gs = nullptr;
  if (n == 1) {
    g = &rep.beta();
    gs = &rep.beta_star();
  } else if (n == rep.n()) {
    g = &rep.beta_tilde();
    gs = &rep.beta_tilde_star();
  } else {
    throw DomainError("element parameter " + std::to_string(n) +
                      " does not match the representation (n = " + std::to_string(rep.n()) + ")");
  }
  SparseMatrix out = rep.identity();
  const SparseMatrix& a = w.apow >= 0 ? rep.alpha() : rep.alpha_star();
  for (int i = 0; i < std::abs(w.apow); ++i) out = SparseMatrix(out * a);
  for (int i = 0; i < w.g; ++i) out = SparseMatrix(out * *g);
  for (int i = 0; i < w.gs; ++i) out = SparseMatrix(out * *gs);
  return out;
}

SparseMatrix eval_element(const MatrixRep& rep, const Element& x) {
  SparseMatrix out(rep.dim(), rep.dim());
  for (const auto& [w, c] : x.terms()) {
    out += c.eval(rep.q()) * eval_word(rep, w, x.n());
  }
  return out;
}

SparseMatrix eval_tensor(const MatrixRep& rep, const TensorElement& x) {
  SparseMatrix out(rep.dim() * rep.dim(), rep.dim() * rep.dim());
  for (const auto& [k, c] : x.terms()) {
    out += c.eval(rep.q()) * kron(eval_word(rep, k[0], x.legs()[0]), eval_word(rep, k[1], x.legs()[1]));
  }
  return out;
}

std::vector<NumericResidual> check_relations(const MatrixRep& rep) {
  const double q = rep.q();
  const double t = std::pow(q, 1.0 / rep.n());
  const SparseMatrix& I = rep.identity();
  const SparseMatrix& al = rep.alpha();
  const SparseMatrix& als = rep.alpha_star();

  struct Case {
    std::string name;
    int d;
    SparseMatrix lhs;
    SparseMatrix rhs;
    double tol;
  };
  std::vector<Case> cases;
  const double tol = rep.config().tol;

  auto su_q2 = [&](const std::string& b, const SparseMatrix& bt, const SparseMatrix& bts) {
    cases.push_back({"al' al + " + b + "' " + b + " = 1", 2, als * al + bts * bt, I, tol});
    cases.push_back({"al al' + q^2 " + b + " " + b + "' = 1", 2, al * als + q * q * (bt * bts), I, tol});
    cases.push_back({"al " + b + " = q " + b + " al", 2, al * bt, q * (bt * al), tol});
    cases.push_back({"al " + b + "' = q " + b + "' al", 2, al * bts, q * (bts * al), tol});
    cases.push_back({b + "' " + b + " = " + b + " " + b + "'", 2, bts * bt, bt * bts, tol});
  };
  su_q2("bt", rep.beta(), rep.beta_star());
  su_q2("btt", rep.beta_double_tilde(), rep.beta_double_tilde_star());

  const SparseMatrix& gt = rep.beta_tilde();
  const SparseMatrix& gts = rep.beta_tilde_star();
  cases.push_back({"gt al = t^-1 al gt", 2, gt * al, (1.0 / t) * (al * gt), tol});
  cases.push_back({"gt' al = t^-1 al gt'", 2, gts * al, (1.0 / t) * (al * gts), tol});
  cases.push_back({"gt al' = t al' gt", 2, gt * als, t * (als * gt), tol});
  cases.push_back({"gt' al' = t al' gt'", 2, gts * als, t * (als * gts), tol});
  cases.push_back({"gt' gt = gt gt'", 2, gts * gt, gt * gts, tol});

  SparseMatrix gt_n = I;
  SparseMatrix gts_n = I;
  for (int i = 0; i < rep.n(); ++i) {
    gt_n = SparseMatrix(gt_n * gt);
    gts_n = SparseMatrix(gts_n * gts);
  }
  const SparseMatrix p = gt_n * gts_n;
  cases.push_back({"al' al = 1 - gt^n gt'^n", 2 * rep.n(), als * al, I - p, tol});
  cases.push_back({"al al' = 1 - q^2 gt^n gt'^n", 2 * rep.n(), al * als, I - q * q * p, tol});
  cases.push_back({"gt^n = bt", rep.n(), gt_n, rep.beta(), std::min(tol, 1e-13)});

  std::vector<NumericResidual> out;
  for (const auto& c : cases) {
    const double r = margin_residual(rep, c.lhs, c.rhs, c.d);
    out.push_back({c.name, r, c.d, r <= c.tol});
  }
  return out;
}

namespace {

double hat(double x, int k, double q) {
  const double peak = std::pow(q, 2 * k);
  const double lo = std::pow(q, 2 * k + 1);
  const double hi = std::pow(q, 2 * k - 1);
  if (x == peak) return 1.0;
  if (x <= lo || x >= hi) return 0.0;
  return x < peak ? (x - lo) / (peak - lo) : (hi - x) / (hi - peak);
}

}  // namespace

SparseMatrix spectral_projection(const MatrixRep& rep, int k) {
  if (k < 0) throw DomainError("projection index must be >= 0");
  const SparseMatrix bb = rep.beta() * rep.beta_star();
  std::vector<double> d(rep.dim(), 0.0);
  for (int col = 0; col < bb.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(bb, col); it; ++it) {
      if (it.row() != it.col()) throw DomainError("beta beta^* is not diagonal");
      d[col] = hat(it.value().real(), k, rep.q());
    }
  }
  return diagonal(d);
}

SpectrumReport spectrum_check(const MatrixRep& rep) {
  SpectrumReport report;
  const SparseMatrix bb = rep.beta() * rep.beta_star();
  report.diagonal = true;
  report.exact = true;
  std::vector<double> diag(rep.dim(), 0.0);
  for (int col = 0; col < bb.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(bb, col); it; ++it) {
      if (it.row() != it.col()) {
        if (it.value() != Complex(0.0)) report.diagonal = false;
        continue;
      }
      diag[col] = it.value().real();
      if (it.value().imag() != 0.0) report.exact = false;
    }
  }
  const int L = rep.cyclic();
  for (int k = 0; k < rep.fock(); ++k) {
    const double want = std::pow(rep.q(), 2 * k);
    for (int l = 0; l < L; ++l) {
      const double got = diag[k * L + l];
      if (got != want) report.exact = false;
      report.max_relative_deviation = std::max(report.max_relative_deviation, std::abs(got - want) / want);
    }
    report.eigenvalues.push_back(diag[k * L]);
  }
  report.smallest = report.eigenvalues.back();
  return report;
}

double symbolic_numeric_crosscheck(const MatrixRep& rep, int count, int degree, std::mt19937_64& rng,
                                   const RewriteRules& rules) {
  RandomSpec spec;
  spec.max_apow = spec.max_g = spec.max_gs = degree;
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Element x = random_element(rng, rep.n(), spec);
    const Element y = random_element(rng, rep.n(), spec);
    const SparseMatrix lhs = eval_element(rep, mul(x, y, rules));
    const SparseMatrix rhs = eval_element(rep, x) * eval_element(rep, y);
    worst = std::max(worst, margin_residual(rep, lhs, rhs, x.max_length() + y.max_length()));
  }
  return worst;
}

double min_margin_form(const MatrixRep& rep, const SparseMatrix& m, int d, std::mt19937_64& rng,
                       int random_vectors) {
  const int top = rep.fock() - 1 - d;
  if (top < 0) throw DomainError("word length exceeds the Fock truncation");
  const int limit = (top + 1) * rep.cyclic();
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < limit; ++i) worst = std::min(worst, m.coeff(i, i).real());

  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(rep.dim());
  for (int r = 0; r < random_vectors; ++r) {
    v.setZero();
    for (int i = 0; i < limit; ++i) v[i] = Complex(normal(rng), normal(rng));
    v.normalize();
    const Eigen::VectorXcd mv = m * v;
    worst = std::min(worst, v.dot(mv).real());
  }
  return worst;
}

}  // namespace qcov
