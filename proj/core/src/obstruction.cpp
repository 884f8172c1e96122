#include "qcov/obstruction.hpp"

#include <set>
#include <sstream>

#include "qcov/format.hpp"

namespace qcov {

namespace {

std::string grade_string(const Grade& g) {
  return "(" + std::to_string(g.first) + "," + std::to_string(g.second) + ")";
}

TensorElement monomial_tensor(int n, const Word& left, const Word& right, const Scalar& c) {
  TensorElement out({n, n}, c.order());
  out.add({left, right}, c);
  return out;
}

TensorElement lookup(const std::map<Grade, TensorElement>& graded, const Grade& g, int n) {
  auto it = graded.find(g);
  return it == graded.end() ? TensorElement({n, n}, n) : it->second;
}

}  // namespace

GradedCandidate::GradedCandidate(int n) : n_(n) {
  if (n < 1) throw DomainError("covering parameter must be >= 1");
}

GradedCandidate GradedCandidate::from_tensor(const TensorElement& x) {
  if (x.legs()[0] != x.legs()[1]) throw DomainError("candidate legs must both be covering legs");
  const int n = x.legs()[0];
  if (x.order() != n) throw DomainError("candidate coefficients must live in R_n");
  GradedCandidate out(n);
  for (auto& [g, part] : zz_grade(x)) out.components_.emplace(g, part);
  return out;
}

GradedCandidate GradedCandidate::canonical(int n, const Scalar& lambda, const Scalar& mu) {
  GradedCandidate out(n);
  out.set({0, 1}, monomial_tensor(n, Word{-1, 0, 0}, Word{0, 1, 0}, lambda));
  out.set({1, 0}, monomial_tensor(n, Word{0, 1, 0}, Word{1, 0, 0}, mu));
  return out;
}

GradedCandidate GradedCandidate::canonical(int n) {
  return canonical(n, Scalar::one(n), Scalar::one(n));
}

TensorElement GradedCandidate::component(const Grade& g) const {
  return lookup(components_, g, n_);
}

TensorElement GradedCandidate::total() const {
  TensorElement out({n_, n_}, n_);
  for (const auto& [g, part] : components_) out += part;
  return out;
}

void GradedCandidate::set(const Grade& g, const TensorElement& x) {
  if (x.legs()[0] != n_ || x.legs()[1] != n_ || x.order() != n_) {
    throw DomainError("candidate component lives in the wrong tensor square");
  }
  for (const auto& [k, c] : x.terms()) {
    if (k[0].degree() != g.first || k[1].degree() != g.second) {
      throw DomainError("component is not homogeneous of grade " + grade_string(g));
    }
  }
  if (x.is_zero()) {
    components_.erase(g);
  } else {
    components_.insert_or_assign(g, x);
  }
}

TensorElement target(int n) {
  TensorElement out({n, n}, n);
  out.add({Word{0, n, 0}, Word{1, 0, 0}}, Scalar::one(n));
  out.add({Word{-1, 0, 0}, Word{0, n, 0}}, Scalar::one(n));
  return out;
}

std::map<Grade, TensorElement> graded_power(const GradedCandidate& x) {
  return zz_grade(power(x.total(), x.n()));
}

TensorElement cross_term(const GradedCandidate& x) {
  return lookup(graded_power(x), {1, x.n() - 1}, x.n());
}

std::optional<Scalar> witness_coefficient(const GradedCandidate& x) {
  const int n = x.n();
  const TensorElement a01 = x.component({0, 1});
  const TensorElement a10 = x.component({1, 0});
  if (a01.is_zero() || a10.is_zero()) return std::nullopt;
  const TensorElement reference = power(a01, n - 1) * a10;
  const TensorElement cross = cross_term(x);
  if (reference.is_zero()) return std::nullopt;
  const auto& [key, ref_coeff] = *reference.terms().begin();
  const auto inv = ref_coeff.inverse();
  if (!inv) return std::nullopt;
  const Scalar ratio = cross.coefficient(key) * *inv;
  if (!(ratio * reference == cross)) return std::nullopt;
  return ratio;
}

std::vector<DeductionStep> support_constraints(const GradedCandidate& x) {
  const int n = x.n();
  const auto powered = graded_power(x);
  const std::set<Grade> target_support{{n, 0}, {0, n}};
  std::vector<DeductionStep> steps;

  {
    DeductionStep step{"support_bounds", false, {}};
    std::vector<Grade> outside;
    for (const auto& [g, part] : x.components()) {
      if (g.first < 0 || g.first > 1 || g.second < 0 || g.second > 1) outside.push_back(g);
    }
    step.fired = !outside.empty();
    std::ostringstream os;
    if (step.fired) {
      os << "candidate support leaves {0,1}x{0,1} at";
      for (const auto& g : outside) os << ' ' << grade_string(g);
      os << "; X^" << n << " has components outside the target support at";
      for (const auto& [g, part] : powered) {
        if (!target_support.contains(g)) os << ' ' << grade_string(g);
      }
    } else {
      os << "support within {0,1}x{0,1}";
    }
    step.detail = os.str();
    steps.push_back(step);
  }

  auto corner_step = [&](const std::string& name, const Grade& corner, const Grade& forced) {
    DeductionStep step{name, false, {}};
    step.fired = !x.component(corner).is_zero();
    if (step.fired) {
      const bool present = !lookup(powered, forced, n).is_zero();
      step.detail = std::string("a") + std::to_string(corner.first) +
                    std::to_string(corner.second) + " != 0; X^" + std::to_string(n) +
                    " component at " + grade_string(forced) + (present ? " is nonzero" : " vanishes");
    } else {
      step.detail = "no component at " + grade_string(corner);
    }
    steps.push_back(step);
  };
  corner_step("a00_forces_00", {0, 0}, {0, 0});
  corner_step("a11_forces_nn", {1, 1}, {n, n});

  auto pure_power_step = [&](const std::string& name, const Grade& g, const TensorElement& want) {
    DeductionStep step{name, false, {}};
    const TensorElement got = power(x.component(g), n);
    step.fired = !(got == want);
    step.detail = "a" + std::to_string(g.first) + std::to_string(g.second) + "^" +
                  std::to_string(n) + " = " + to_string(got) + (step.fired ? " (differs from " : " (matches ") +
                  to_string(want) + ")";
    steps.push_back(step);
  };
  pure_power_step("a01_power", {0, 1}, monomial_tensor(n, Word{-1, 0, 0}, Word{0, n, 0}, Scalar::one(n)));
  pure_power_step("a10_power", {1, 0}, monomial_tensor(n, Word{0, n, 0}, Word{1, 0, 0}, Scalar::one(n)));

  DeductionStep cross{"cross_term_nonzero", false, {}};
  if (n == 1) {
    cross.detail = "n = 1: grade (1,0) belongs to the target, no cross grade";
  } else {
    const TensorElement c = lookup(powered, {1, n - 1}, n);
    cross.fired = !c.is_zero();
    cross.detail = "X^" + std::to_string(n) + " at " + grade_string({1, n - 1}) + ": " + to_string(c);
  }
  steps.push_back(cross);
  return steps;
}

ObstructionReport power_compare(const GradedCandidate& x) {
  const int n = x.n();
  ObstructionReport report;
  report.n = n;
  report.target_value = target(n);
  report.power_value = power(x.total(), n);
  const auto powered = zz_grade(report.power_value);
  const auto wanted = zz_grade(report.target_value);
  std::set<Grade> grades;
  for (const auto& [g, part] : powered) grades.insert(g);
  for (const auto& [g, part] : wanted) grades.insert(g);
  for (const auto& g : grades) {
    TensorElement expected = lookup(wanted, g, n);
    TensorElement actual = lookup(powered, g, n);
    if (!(expected == actual)) report.mismatches.push_back({g, expected, actual});
  }
  report.verdict = report.mismatches.empty() ? ObstructionReport::Verdict::satisfied
                                             : ObstructionReport::Verdict::obstructed;
  report.steps = support_constraints(x);
  report.witness_grade = {1, n - 1};
  report.cross_term_value = lookup(powered, report.witness_grade, n);
  report.witness_coefficient = witness_coefficient(x);
  return report;
}

std::vector<Scalar> default_units(int n) {
  const Scalar one = Scalar::one(n);
  const Scalar zeta = Scalar::root_of_unity(n, 1);
  const Scalar t = Scalar::t_power(n, 1);
  return {one, -one, zeta, t, zeta * t};
}

std::vector<SweepItem> scalar_sweep(int n, const std::vector<Scalar>& units) {
  std::vector<SweepItem> out;
  for (const auto& lambda : units) {
    for (const auto& mu : units) {
      out.push_back({lambda, mu, power_compare(GradedCandidate::canonical(n, lambda, mu))});
    }
  }
  return out;
}

}  // namespace qcov
