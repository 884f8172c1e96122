#include "qcov/scalar.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace qcov {

namespace {

using Poly = std::vector<long>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic integer polynomial; the remainder must vanish.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic division degree");
  Poly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long c = num[i];
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

struct ReductionTable {
  int phi = 0;
  // powers[p][c]: coefficient of zeta^c in zeta^p, 0 <= p < n.
  std::vector<std::vector<long>> powers;
};

ReductionTable build_table(int n) {
  const Poly phi_poly = cyclotomic_poly(n);
  ReductionTable table;
  table.phi = static_cast<int>(phi_poly.size()) - 1;
  std::vector<long> cur(table.phi, 0);
  cur[0] = 1;
  for (int p = 0; p < n; ++p) {
    table.powers.push_back(cur);
    // multiply by x, then reduce x^phi = -(lower coefficients)
    std::vector<long> next(table.phi, 0);
    const long top = cur[table.phi - 1];
    for (int c = table.phi - 1; c > 0; --c) next[c] = cur[c - 1];
    for (int c = 0; c < table.phi; ++c) next[c] -= top * phi_poly[c];
    cur = std::move(next);
  }
  return table;
}

void check_order(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw DomainError("unsupported cyclotomic order " + std::to_string(order) +
                      " (supported range 1.." + std::to_string(kMaxOrder) + ")");
  }
}

const ReductionTable& table_for(int order) {
  static const std::array<ReductionTable, kMaxOrder + 1> tables = [] {
    std::array<ReductionTable, kMaxOrder + 1> out;
    for (int n = 1; n <= kMaxOrder; ++n) out[n] = build_table(n);
    return out;
  }();
  check_order(order);
  return tables[order];
}

int mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<long> cyclotomic_poly(int n) {
  if (n < 1) throw DomainError("cyclotomic_poly needs n >= 1");
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_exact(num, cyclotomic_poly(d));
  }
  return num;
}

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi needs n >= 1");
  int count = 0;
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return count;
}

int lcm_order(int a, int b) {
  const int l = std::lcm(a, b);
  check_order(l);
  return l;
}

Scalar::Scalar(int order) : order_(order) { check_order(order); }

Scalar Scalar::constant(int order, const Rational& r) { return monomial(order, r, 0, 0); }

Scalar Scalar::monomial(int order, const Rational& r, int zexp, int texp) {
  Scalar s(order);
  if (r != 0) s.add_reduced(zexp, texp, r);
  return s;
}

void Scalar::add_reduced(int zexp, int texp, const Rational& r) {
  Rational rc = r;
  rc.canonicalize();  // mpq_class(p, q) is not reduced on construction
  const auto& table = table_for(order_);
  const auto& row = table.powers[mod(zexp, order_)];
  for (int c = 0; c < table.phi; ++c) {
    if (row[c] == 0) continue;
    const Monomial key{c, texp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, rc * row[c]);
    } else {
      it->second += rc * row[c];
      if (it->second == 0) terms_.erase(it);
    }
  }
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
         terms_.begin()->second == 1;
}

bool Scalar::is_rational_monomial() const {
  return terms_.size() == 1 && terms_.begin()->first.zexp == 0;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.order_ != order_) throw DomainError("scalar order mismatch");
  for (const auto& [m, r] : other.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, r);
    } else {
      it->second += r;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& [m, r] : out.terms_) r = -r;
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.order_ != b.order_) throw DomainError("scalar order mismatch");
  Scalar out(a.order_);
  for (const auto& [ma, ra] : a.terms_) {
    for (const auto& [mb, rb] : b.terms_) {
      out.add_reduced(ma.zexp + mb.zexp, ma.texp + mb.texp, ra * rb);
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar Scalar::conj() const {
  Scalar out(order_);
  for (const auto& [m, r] : terms_) out.add_reduced(-m.zexp, m.texp, r);
  return out;
}

std::optional<Scalar> Scalar::inverse() const {
  if (is_zero()) return std::nullopt;
  const int texp = terms_.begin()->first.texp;
  for (const auto& [m, r] : terms_) {
    if (m.texp != texp) return std::nullopt;
  }
  const int phi = table_for(order_).phi;
  Scalar c(order_);
  for (const auto& [m, r] : terms_) c.add_reduced(m.zexp, 0, r);

  // Solve (multiplication-by-c matrix) x = e_0 over Q.
  std::vector<std::vector<Rational>> mat(phi, std::vector<Rational>(phi + 1, 0));
  for (int col = 0; col < phi; ++col) {
    const Scalar img = c * root_of_unity(order_, col);
    for (const auto& [m, r] : img.terms_) mat[m.zexp][col] = r;
  }
  mat[0][phi] = 1;
  for (int col = 0; col < phi; ++col) {
    int pivot = col;
    while (pivot < phi && mat[pivot][col] == 0) ++pivot;
    if (pivot == phi) return std::nullopt;
    std::swap(mat[pivot], mat[col]);
    const Rational lead = mat[col][col];
    for (auto& v : mat[col]) v /= lead;
    for (int row = 0; row < phi; ++row) {
      if (row == col || mat[row][col] == 0) continue;
      const Rational f = mat[row][col];
      for (int k = col; k <= phi; ++k) mat[row][k] -= f * mat[col][k];
    }
  }
  Scalar out(order_);
  for (int i = 0; i < phi; ++i) {
    if (mat[i][phi] != 0) out.add_reduced(i, -texp, mat[i][phi]);
  }
  return out;
}

Scalar Scalar::pow(int k) const {
  Scalar base = *this;
  if (k < 0) {
    auto inv = inverse();
    if (!inv) throw DomainError("negative power of a non-unit scalar");
    base = *inv;
    k = -k;
  }
  Scalar out = one(order_);
  while (k > 0) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

Scalar Scalar::lift(int target) const {
  check_order(target);
  if (target % order_ != 0) {
    throw DomainError("cannot lift order " + std::to_string(order_) + " scalar to order " +
                      std::to_string(target));
  }
  const int f = target / order_;
  Scalar out(target);
  for (const auto& [m, r] : terms_) out.add_reduced(m.zexp * f, m.texp * f, r);
  return out;
}

std::complex<double> Scalar::eval(double q) const {
  const double t = std::pow(q, 1.0 / order_);
  const std::complex<double> zeta = std::polar(1.0, 2.0 * std::numbers::pi / order_);
  std::complex<double> sum = 0.0;
  for (const auto& [m, r] : terms_) {
    sum += r.get_d() * std::pow(zeta, m.zexp) * std::pow(t, m.texp);
  }
  return sum;
}

std::complex<double> scalar_eval(const Scalar& a, double q) { return a.eval(q); }

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, r] : terms_) {
    Rational mag = abs(r);
    if (first) {
      if (r < 0) os << '-';
    } else {
      os << (r < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    auto sep = [&] {
      if (wrote) os << ' ';
      wrote = true;
    };
    const bool unit_monomial = m.zexp == 0 && m.texp == 0;
    if (mag != 1 || unit_monomial) {
      sep();
      os << mag.get_str();
    }
    if (m.zexp != 0) {
      sep();
      os << 'z';
      if (m.zexp != 1) os << '^' << m.zexp;
    }
    if (m.texp != 0) {
      sep();
      os << 't';
      if (m.texp != 1) os << '^' << m.texp;
    }
  }
  return os.str();
}

}  // namespace qcov
