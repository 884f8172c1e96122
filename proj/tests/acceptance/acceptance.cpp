// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qcov/cli.hpp"
#include "qcov/commcontrol.hpp"
#include "qcov/covering.hpp"
#include "qcov/expr.hpp"
#include "qcov/format.hpp"
#include "qcov/matrep.hpp"
#include "qcov/obstruction.hpp"
#include "qcov/random.hpp"

using namespace qcov;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Elements whose total length stays within the degree bound.
Element bounded_base(std::mt19937_64& rng, int degree) {
  RandomSpec spec;
  spec.max_apow = spec.max_g = spec.max_gs = degree;
  spec.max_terms = 2;
  while (true) {
    Element x = random_element(rng, 1, spec);
    if (x.max_length() <= degree) return x;
  }
}

ModuleVector random_module(std::mt19937_64& rng, int n) {
  RandomSpec spec;
  spec.max_apow = spec.max_g = spec.max_gs = 2;
  spec.max_terms = 2;
  ModuleVector v(n);
  for (auto& slot : v.slots) slot = random_element(rng, 1, n, spec);
  return v;
}

std::vector<Word> words_up_to(int len, int gs_step = 1) {
  std::vector<Word> out;
  for (int k = -len; k <= len; ++k)
    for (int g = 0; g <= len; ++g)
      for (int gs = 0; gs <= len; gs += gs_step) {
        const Word w{k, g, gs};
        if (w.length() <= len) out.push_back(w);
      }
  return out;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult qcov_run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcov");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

Outcome nf1() {
  Outcome o;
  std::mt19937_64 rng(101);
  RandomSpec spec;  // |apow|, g, gs <= 3
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 3;
    const Element x = Element::monomial(n, random_word(rng, spec));
    const Element y = Element::monomial(n, random_word(rng, spec));
    const Element z = Element::monomial(n, random_word(rng, spec));
    if (!((x * y) * z == x * (y * z))) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " failing triples");
  o.detail = o.pass ? "500 triples, 0 failures" : o.detail;
  return o;
}

Outcome nf2() {
  Outcome o;
  double worst = 0.0;
  for (int n : {2, 3}) {
    const MatrixRep rep = MatrixRep::build(0.5, n, 64, 8);
    std::mt19937_64 rng(200 + n);
    worst = std::max(worst, symbolic_numeric_crosscheck(rep, 100, 3, rng));
  }
  RewriteRules mutated;
  mutated.gamma_alpha_sign = +1;
  const MatrixRep rep = MatrixRep::build(0.5, 2, 64, 8);
  std::mt19937_64 rng(202);
  const double control = symbolic_numeric_crosscheck(rep, 100, 3, rng, mutated);
  o.require(worst <= 1e-9, "residual " + sci(worst) + " > 1e-9");
  o.require(control >= 0.1, "mutated rule residual " + sci(control) + " < 0.1");
  if (o.pass) o.detail = "max residual " + sci(worst) + ", mutated control " + sci(control);
  return o;
}

Outcome rel1() {
  Outcome o;
  double worst = 0.0;
  for (int n : {2, 3}) {
    const MatrixRep rep = MatrixRep::build(MatrixRepConfig{0.5, n, 64, 8, 1e-10});
    for (const auto& r : check_relations(rep)) {
      if (r.relation == "gt^n = bt") continue;
      worst = std::max(worst, r.max_residual);
      o.require(r.max_residual <= 1e-10, r.relation + " residual " + sci(r.max_residual));
    }
  }
  if (o.pass) o.detail = "max margin residual " + sci(worst);
  return o;
}

Outcome rel2() {
  Outcome o;
  double worst = 0.0;
  for (int n : {2, 3}) {
    const MatrixRep rep = MatrixRep::build(0.5, n, 64, 8);
    for (const auto& r : check_relations(rep)) {
      if (r.relation != "gt^n = bt") continue;
      worst = std::max(worst, r.max_residual);
      o.require(r.max_residual <= 1e-13, "gt^n residual " + sci(r.max_residual));
    }
    const SpectrumReport s = spectrum_check(rep);
    o.require(s.diagonal, "beta beta^* has off-diagonal entries");
    o.require(s.exact, "diagonal differs from q^(2k)");
    o.require(static_cast<int>(s.eigenvalues.size()) == 64, "wrong number of levels");
  }
  if (o.pass) o.detail = "gt^n residual " + sci(worst) + ", spectrum exact";
  return o;
}

Outcome hopf1() {
  Outcome o;
  for (const auto& r : delta_respects_relations(1)) o.require(r.residual.is_zero(), "delta of " + r.relation);
  int words = 0;
  for (const Word& w : words_up_to(4)) {
    ++words;
    o.require(coassoc_check(Element::monomial(1, w)).equal(), "coassociativity on " + word_string(w, 1));
  }
  std::mt19937_64 rng(301);
  for (int i = 0; i < 200; ++i) {
    const Element a = bounded_base(rng, 3), b = bounded_base(rng, 3);
    o.require(delta(a * b) == delta(a) * delta(b), "multiplicativity on " + to_string(a) + ", " + to_string(b));
    o.require(delta(star(a)) == legwise_star(delta(a)), "star on " + to_string(a));
  }
  if (o.pass) o.detail = "5 relations, " + std::to_string(words) + " words, 200 pairs";
  return o;
}

Outcome cov1() {
  Outcome o;
  int words = 0;
  for (int n : {2, 3}) {
    for (const Word& w : words_up_to(6)) {
      if (w.gs % n != 0) continue;
      ++words;
      const Element x = Element::monomial(n, w);
      o.require(assemble(decompose(x)) == x, "round trip at " + to_string(x));
    }
    std::mt19937_64 rng(400 + n);
    for (int i = 0; i < 100; ++i) {
      const ModuleVector v = random_module(rng, n), u = random_module(rng, n);
      o.require(decompose(assemble(v)) == v, "decompose(assemble(v)) != v");
      o.require(assemble(module_multiply(v, u)) == assemble(v) * assemble(u), "twisted product");
    }
  }
  if (o.pass) o.detail = std::to_string(words) + " words, 200 module pairs";
  return o;
}

Outcome cov2() {
  Outcome o;
  for (int n : {2, 3}) {
    for (const Word& w : words_up_to(4)) {
      const Element a = Element::monomial(1, w);
      const Element ia = embed_base(a, n);
      o.require(delta_R(ia) == promote(delta(a), std::array<int, 2>{1, n}, n), "delta_R restriction");
      o.require(delta_L(ia) == promote(delta(a), std::array<int, 2>{n, 1}, n), "delta_L restriction");
    }
  }
  std::mt19937_64 rng(501);
  bool right_nonzero = false;
  for (int n : {2, 3}) {
    for (int i = 0; i < 20; ++i) {
      const ModuleVector v = random_module(rng, n);
      o.require(coaction_check(v).pass, "coaction identities");
      o.require(equivariance_check(v).pass, "one-leg equivariance");
      const LinearityReport lin = linearity_report(v, bounded_base(rng, 2), bounded_base(rng, 2));
      o.require(lin.left.pass && lin.left_R.pass, "left linearity");
      right_nonzero = right_nonzero || !lin.right_residual.is_zero();
    }
  }
  ModuleVector g(2);
  g.slots[1] = Element::unit(1, 2);
  right_nonzero = right_nonzero || !linearity_report(g, Element::unit(1), Element::alpha(1)).right_residual.is_zero();
  o.require(right_nonzero, "right-linearity residual vanished everywhere");
  if (o.pass) o.detail = "restriction, identities, equivariance, left linearity exact; right residual nonzero";
  return o;
}

Outcome cov3() {
  Outcome o;
  std::mt19937_64 rng(601);
  for (int n : {2, 3}) {
    for (int i = 0; i < 40; ++i) {
      const Element x = random_element(rng, n), y = random_element(rng, n);
      const Element a = embed_base(random_element(rng, 1, n), n);
      const Element xy = inner_product(x, y);
      for (int m = 0; m < n; ++m) o.require(deck_act(DeckElement(n, m), xy) == xy, "deck invariance");
      o.require(star(xy) == inner_product(y, x), "hermitian symmetry");
      o.require(inner_product(x, y * a) == xy * a, "right linearity");
    }
  }
  double lowest = 0.0;
  RandomSpec spec;
  spec.max_apow = spec.max_g = spec.max_gs = 2;
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 2;
    const MatrixRep rep = MatrixRep::build(0.5, n, 32, 6);
    const Element x = random_element(rng, n, spec);
    const double m = min_margin_form(rep, eval_element(rep, inner_product(x, x)), 2 * x.max_length(), rng);
    lowest = std::min(lowest, m);
    o.require(m >= -1e-10, "v* <x,x> v = " + sci(m));
  }
  if (o.pass) o.detail = "algebraic identities exact; min margin form " + sci(lowest);
  return o;
}

TensorElement shuffle_cross_term(int n) {
  TensorElement out({n, n}, n);
  for (int pos = 0; pos < n; ++pos) {
    std::string left, right;
    for (int i = 0; i < n; ++i) {
      left += i == pos ? "g" : "A";
      right += i == pos ? "a" : "g";
    }
    out += tensor(oracle::rewrite(n, n, left), oracle::rewrite(n, n, right));
  }
  return out;
}

Outcome obs1() {
  Outcome o;
  const Scalar one_t2 = Scalar::one(2) + Scalar::t_power(2, 2);
  const TensorElement want2 = one_t2 * tensor(Element::alpha_star(2) * Element::gamma(2),
                                              Element::gamma(2) * Element::alpha(2));
  const ObstructionReport r2 = power_compare(GradedCandidate::canonical(2));
  o.require(r2.witness_grade == Grade{1, 1}, "witness grade at n=2");
  o.require(r2.cross_term_value == want2, "n=2 cross term " + to_string(r2.cross_term_value));

  const TensorElement shuffle3 = shuffle_cross_term(3);
  const TensorElement ref3 = tensor(power(Element::alpha_star(3), 2) * Element::gamma(3),
                                    power(Element::gamma(3), 2) * Element::alpha(3));
  const Scalar geo3 = Scalar::one(3) + Scalar::t_power(3, 2) + Scalar::t_power(3, 4);
  o.require(shuffle3 == geo3 * ref3, "shuffle expansion at n=3 is not (1+t^2+t^4) a01^2 a10");
  const ObstructionReport r3 = power_compare(GradedCandidate::canonical(3));
  o.require(r3.cross_term_value == shuffle3, "n=3 cross term differs from the shuffle expansion");
  o.require(r3.witness_coefficient && *r3.witness_coefficient == geo3, "n=3 coefficient");

  int swept = 0;
  for (int n : {2, 3, 4}) {
    for (const auto& item : scalar_sweep(n, default_units(n))) {
      ++swept;
      o.require(item.report.verdict == ObstructionReport::Verdict::obstructed,
                "satisfied at n=" + std::to_string(n) + " lambda=" + item.lambda.to_string() +
                    " mu=" + item.mu.to_string());
    }
  }
  o.require(power_compare(GradedCandidate::canonical(1)).verdict == ObstructionReport::Verdict::satisfied,
            "n=1 canonical candidate not satisfied");
  if (o.pass) o.detail = "n=2 (1 + t^2), n=3 " + geo3.to_string() + ", " + std::to_string(swept) + " swept obstructed, n=1 satisfied";
  return o;
}

Outcome comm1() {
  Outcome o;
  for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const std::string tag = " (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
    const LemmaReport r = lemma_equivariance_report(m, n);
    o.require(fixed_algebra_check(m, n).pass, "fixed algebra" + tag);
    o.require(restriction_check(m, n).pass, "restriction" + tag);
    o.require(r.one_leg_all, "one-leg equivariance" + tag);
    o.require(r.checks_pass(), "control checks" + tag);
  }
  const LemmaReport w = lemma_equivariance_report(2, 2);
  bool witness = false;
  for (const auto& c : w.cases) {
    if (c.f_index == 1 && c.h == 2) witness = c.one_leg && !c.two_leg;
  }
  o.require(witness, "two-leg form did not fail on f=delta1, h=2");
  if (o.pass) o.detail = "one-leg holds, two-leg fails at m=2 n=2 f=delta1 h=2";
  return o;
}

Outcome cli1() {
  Outcome o;
  std::mt19937_64 rng(701);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 4;
    const Element x = random_element(rng, n);
    const std::string text = to_string(x);
    o.require(parse_element(text, n) == x, "round trip failed on " + text);
  }
  auto golden = [](const std::string& name) {
    std::ifstream in(std::string(QCOV_GOLDEN_DIR) + "/" + name);
    return in.good() ? nlohmann::json::parse(in) : nlohmann::json();
  };
  const std::vector<std::pair<std::vector<std::string>, std::string>> runs{
      {{"delta", "--n", "1", "--json", "-e", "bt"}, "delta_bt.json"},
      {{"counterexample", "--n", "2", "--json"}, "counterexample_n2.json"},
      {{"numcheck", "--json", "--seed", "1"}, "numcheck.json"}};
  for (const auto& [args, file] : runs) {
    const CliResult a = qcov_run(args), b = qcov_run(args);
    o.require(a.code == 0, file + ": exit " + std::to_string(a.code));
    o.require(a.out == b.out, file + ": output differs between runs");
    const nlohmann::json got = nlohmann::json::parse(a.out), want = golden(file);
    if (file == "numcheck.json") {
      bool same = got.size() == want.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) {
        same = got[i]["relation"] == want[i]["relation"] && got[i]["pass"] == want[i]["pass"] &&
               got[i]["margin"] == want[i]["margin"] &&
               std::abs(got[i]["max_residual"].get<double>() - want[i]["max_residual"].get<double>()) <= 1e-14;
      }
      o.require(same, file + ": differs from golden");
    } else {
      o.require(got == want, file + ": differs from golden");
    }
  }
  if (o.pass) o.detail = "500 round trips, 3 goldens stable";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"NF-1", nf1},   {"NF-2", nf2},   {"REL-1", rel1}, {"REL-2", rel2}, {"HOPF-1", hopf1}, {"COV-1", cov1},
      {"COV-2", cov2}, {"COV-3", cov3}, {"OBS-1", obs1}, {"COMM-1", comm1}, {"CLI-1", cli1}};
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %-7s %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
