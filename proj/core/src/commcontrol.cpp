#include "qcov/commcontrol.hpp"

#include <string>

namespace qcov {

namespace {

int mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

std::string point(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

// Row-reduces over Q and returns the rank.
int rank(std::vector<std::vector<Rational>> rows) {
  int r = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int pivot = r;
    while (pivot < static_cast<int>(rows.size()) && rows[pivot][c] == 0) ++pivot;
    if (pivot == static_cast<int>(rows.size())) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (int k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

void check_m(int m) {
  if (m < 1) throw DomainError("cyclic group order must be >= 1");
}

}  // namespace

CyclicFun CyclicFun::delta(int m, int i, int order) {
  check_m(m);
  CyclicFun f{m, std::vector<Scalar>(m, Scalar(order))};
  f.values[mod(i, m)] = Scalar::one(order);
  return f;
}

CyclicFun CyclicFun::constant(int m, const Scalar& c) {
  check_m(m);
  return CyclicFun{m, std::vector<Scalar>(m, c)};
}

CyclicFun CyclicFun::star() const {
  CyclicFun out = *this;
  for (auto& v : out.values) v = v.conj();
  return out;
}

CyclicFun operator*(const CyclicFun& a, const CyclicFun& b) {
  if (a.m != b.m) throw DomainError("functions on different groups");
  CyclicFun out = a;
  for (int x = 0; x < a.m; ++x) out.values[x] = a.values[x] * b.values[x];
  return out;
}

CyclicFun operator+(const CyclicFun& a, const CyclicFun& b) {
  if (a.m != b.m) throw DomainError("functions on different groups");
  CyclicFun out = a;
  for (int x = 0; x < a.m; ++x) out.values[x] = a.values[x] + b.values[x];
  return out;
}

int commcontrol_order(int m, int n) { return m * n <= kMaxOrder ? m * n : 1; }

FunTable comult(const CyclicFun& f) {
  FunTable table(f.m);
  for (int x = 0; x < f.m; ++x) {
    for (int y = 0; y < f.m; ++y) table[x].push_back(f.values[(x + y) % f.m]);
  }
  return table;
}

CheckReport coassoc_check(const CyclicFun& f) {
  CheckReport report{"coassociativity"};
  const FunTable t = comult(f);
  const int m = f.m;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        // (delta (x) id) delta f at (a,b,c) vs (id (x) delta) delta f
        const Scalar& left = t[(a + b) % m][c];
        const Scalar& right = t[a][(b + c) % m];
        if (!(left == right)) report.fail("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  }
  return report;
}

CheckReport star_check(const CyclicFun& f) {
  CheckReport report{"star_compatibility"};
  const FunTable lhs = comult(f.star());
  const FunTable rhs = comult(f);
  for (int x = 0; x < f.m; ++x) {
    for (int y = 0; y < f.m; ++y) {
      if (!(lhs[x][y] == rhs[x][y].conj())) report.fail(point(x, y));
    }
  }
  return report;
}

CyclicFun cover_embed(const CyclicFun& f, int n) {
  if (n < 1) throw DomainError("covering degree must be >= 1");
  CyclicFun out{f.m * n, {}};
  for (int x = 0; x < f.m * n; ++x) out.values.push_back(f.values[x % f.m]);
  return out;
}

CyclicFun deck_translate(const CyclicFun& f, int h, int base_m) {
  if (mod(h, base_m) != 0) {
    throw DomainError("translation by " + std::to_string(h) + " is not a deck transformation of Z_" +
                      std::to_string(f.m) + " -> Z_" + std::to_string(base_m));
  }
  CyclicFun out = f;
  for (int x = 0; x < f.m; ++x) out.values[x] = f.values[mod(x - h, f.m)];
  return out;
}

std::vector<std::vector<Rational>> fixed_basis(int m, int n) {
  // Null space of (L_m - 1); L_m generates the deck group.
  const int size = m * n;
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size, 0));
  for (int x = 0; x < size; ++x) {
    mat[x][x] -= 1;
    mat[x][mod(x - m, size)] += 1;
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < size && r < size; ++c) {
    int p = r;
    while (p < size && mat[p][c] == 0) ++p;
    if (p == size) continue;
    std::swap(mat[p], mat[r]);
    const Rational lead = mat[r][c];
    for (auto& v : mat[r]) v /= lead;
    for (int i = 0; i < size; ++i) {
      if (i == r || mat[i][c] == 0) continue;
      const Rational f = mat[i][c];
      for (int k = 0; k < size; ++k) mat[i][k] -= f * mat[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(size, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < size; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(size, 0);
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -mat[i][free];
    basis.push_back(v);
  }
  return basis;
}

CheckReport fixed_algebra_check(int m, int n) {
  CheckReport report{"fixed_algebra_equals_base"};
  const auto fixed = fixed_basis(m, n);
  std::vector<std::vector<Rational>> embedded;
  for (int i = 0; i < m; ++i) {
    const CyclicFun e = cover_embed(CyclicFun::delta(m, i, 1), n);
    std::vector<Rational> row;
    for (const auto& v : e.values) row.push_back(v.is_zero() ? Rational(0) : v.terms().begin()->second);
    embedded.push_back(row);
  }
  auto both = fixed;
  both.insert(both.end(), embedded.begin(), embedded.end());
  const int rf = rank(fixed);
  const int re = rank(embedded);
  const int rb = rank(both);
  report.notes.push_back("dim fixed = " + std::to_string(rf) + ", dim image = " + std::to_string(re) +
                         ", dim span = " + std::to_string(rb));
  if (!(rf == re && re == rb)) report.fail("fixed subalgebra differs from embedded base");
  return report;
}

CheckReport restriction_check(int m, int n) {
  CheckReport report{"restriction"};
  const int order = commcontrol_order(m, n);
  for (int i = 0; i < m; ++i) {
    const CyclicFun f = CyclicFun::delta(m, i, order);
    const FunTable lifted = comult(cover_embed(f, n));
    const FunTable base = comult(f);
    for (int x = 0; x < m * n; ++x) {
      for (int y = 0; y < m * n; ++y) {
        if (!(lifted[x][y] == base[x % m][y % m])) {
          report.fail("f=delta" + std::to_string(i) + " at " + point(x, y));
        }
      }
    }
  }
  return report;
}

CheckReport character_check(int m, int n) {
  CheckReport report{"characters_grouplike"};
  const int size = m * n;
  if (size > kMaxOrder) {
    report.notes.push_back("skipped: order " + std::to_string(size) + " exceeds the cyclotomic range");
    return report;
  }
  for (int k = 0; k < size; ++k) {
    CyclicFun chi{size, {}};
    for (int x = 0; x < size; ++x) chi.values.push_back(Scalar::root_of_unity(size, k * x));
    const FunTable t = comult(chi);
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        if (!(t[x][y] == chi.values[x] * chi.values[y])) {
          report.fail("chi" + std::to_string(k) + " at " + point(x, y));
        }
      }
    }
  }
  return report;
}

bool LemmaReport::checks_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

LemmaReport lemma_equivariance_report(int m, int n) {
  check_m(m);
  if (n < 1) throw DomainError("covering degree must be >= 1");
  LemmaReport report;
  report.m = m;
  report.n = n;
  const int size = m * n;
  const int order = commcontrol_order(m, n);
  for (int i = 0; i < size; ++i) {
    const CyclicFun f = CyclicFun::delta(size, i, order);
    const FunTable df = comult(f);
    for (int k = 0; k < n; ++k) {
      const int h = k * m;
      const FunTable lhs = comult(deck_translate(f, h, m));
      EquivarianceCase c{i, h, true, true};
      for (int x = 0; x < size; ++x) {
        for (int y = 0; y < size; ++y) {
          if (!(lhs[x][y] == df[mod(x - h, size)][y])) c.one_leg = false;
          if (!(lhs[x][y] == df[mod(x - h, size)][mod(y - h, size)])) c.two_leg = false;
        }
      }
      report.one_leg_all = report.one_leg_all && c.one_leg;
      report.two_leg_all = report.two_leg_all && c.two_leg;
      report.cases.push_back(c);
    }
  }
  report.checks.push_back(fixed_algebra_check(m, n));
  report.checks.push_back(restriction_check(m, n));
  CheckReport coassoc{"coassociativity_and_star"};
  for (int i = 0; i < size; ++i) {
    const CyclicFun f = CyclicFun::delta(size, i, order);
    for (const auto& part : {coassoc_check(f), star_check(f)}) {
      for (const auto& term : part.residual_terms) coassoc.fail("delta" + std::to_string(i) + " " + part.check + " " + term);
    }
  }
  report.checks.push_back(coassoc);
  report.checks.push_back(character_check(m, n));
  return report;
}

}  // namespace qcov
