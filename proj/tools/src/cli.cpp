#include "qcov/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcov/commcontrol.hpp"
#include "qcov/covering.hpp"
#include "qcov/expr.hpp"
#include "qcov/format.hpp"
#include "qcov/json.hpp"
#include "qcov/matrep.hpp"
#include "qcov/obstruction.hpp"

namespace qcov::cli {

namespace {

struct Globals {
  int n = 1;
  bool json = false;
  bool pretty = false;
  std::uint64_t seed = 1;
  std::vector<std::string> exprs;
};

class Session {
 public:
  Session(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  FormatOptions fmt() const { return FormatOptions{g_.pretty}; }

  const std::string& expr_arg(std::size_t count, std::size_t i) const {
    if (g_.exprs.size() != count) {
      throw CLI::ValidationError("expected " + std::to_string(count) + " expression(s), got " +
                                 std::to_string(g_.exprs.size()));
    }
    return g_.exprs[i];
  }

  Value value(std::size_t count = 1, std::size_t i = 0) const {
    return parse_value(expr_arg(count, i), g_.n);
  }
  Element element(std::size_t count = 1, std::size_t i = 0) const {
    return parse_element(expr_arg(count, i), g_.n);
  }

  int emit(const Value& v) const {
    if (const auto* x = std::get_if<Element>(&v)) return emit(*x);
    return emit(std::get<TensorElement>(v));
  }
  int emit(const Element& x) const {
    if (g_.json) {
      out_ << to_json(x).dump(2) << '\n';
    } else {
      out_ << to_string(x, fmt()) << '\n';
    }
    return ok;
  }
  int emit(const TensorElement& x) const {
    if (g_.json) {
      out_ << to_json(x).dump(2) << '\n';
    } else {
      out_ << to_string(x, fmt()) << '\n';
    }
    return ok;
  }
  int emit(const Json& j) const {
    out_ << j.dump(2) << '\n';
    return ok;
  }

  const Globals& g_;
  std::ostream& out_;
};

int cmd_norm(const Session& s) { return s.emit(s.value()); }

int cmd_star(const Session& s) {
  const Value v = s.value();
  if (const auto* t = std::get_if<TensorElement>(&v)) return s.emit(legwise_star(*t));
  return s.emit(star(std::get<Element>(v)));
}

int cmd_mul(const Session& s) {
  const Value a = s.value(2, 0);
  const Value b = s.value(2, 1);
  if (a.index() != b.index()) throw DomainError("mul needs two elements or two tensors");
  if (a.index() == 0) return s.emit(std::get<Element>(a) * std::get<Element>(b));
  return s.emit(std::get<TensorElement>(a) * std::get<TensorElement>(b));
}

int cmd_grade(const Session& s) {
  const auto parts = grade(s.element());
  if (s.g_.json) {
    Json comps = Json::array();
    for (const auto& [d, x] : parts) comps.push_back({{"degree", d}, {"element", to_json(x)}});
    return s.emit(Json{{"components", std::move(comps)}});
  }
  for (const auto& [d, x] : parts) s.out_ << "deg " << d << ": " << to_string(x, s.fmt()) << '\n';
  return ok;
}

int cmd_act(const Session& s, int m) {
  return s.emit(deck_act(DeckElement(s.g_.n, m), s.element()));
}

int cmd_delta(const Session& s) {
  const Element x = s.element();
  if (x.n() == 1) return s.emit(delta(x));
  const auto base = pullback_base(x);
  if (!base) throw DomainError("delta is defined on the base algebra; use deltaL or deltaR");
  return s.emit(delta(*base));
}

int cmd_delta_lr(const Session& s, bool right) {
  const Element x = s.element();
  return s.emit(right ? delta_R(x) : delta_L(x));
}

int cmd_inner(const Session& s) { return s.emit(inner_product(s.element(2, 0), s.element(2, 1))); }

int cmd_decomp(const Session& s) {
  const ModuleVector v = decompose(s.element());
  if (s.g_.json) return s.emit(to_json(v));
  for (std::size_t j = 0; j < v.slots.size(); ++j) {
    s.out_ << "slot " << j << ": " << to_string(v.slots[j], s.fmt()) << '\n';
  }
  return ok;
}

int cmd_counterexample(const Session& s) {
  const ObstructionReport r = power_compare(GradedCandidate::canonical(s.g_.n));
  if (s.g_.json) return s.emit(to_json(r));
  const FormatOptions f = s.fmt();
  s.out_ << "verdict: " << r.verdict_name() << '\n';
  s.out_ << "witness grade: (" << r.witness_grade.first << "," << r.witness_grade.second << ")\n";
  s.out_ << "witness coefficient: "
         << (r.witness_coefficient ? to_string(*r.witness_coefficient, f) : std::string("undefined"))
         << '\n';
  s.out_ << "cross term: " << to_string(r.cross_term_value, f) << '\n';
  for (const auto& st : r.steps) {
    s.out_ << "  [" << (st.fired ? "x" : " ") << "] " << st.name;
    if (!st.detail.empty()) s.out_ << ": " << st.detail;
    s.out_ << '\n';
  }
  for (const auto& mm : r.mismatches) {
    s.out_ << "  grade (" << mm.grade.first << "," << mm.grade.second
           << "): expected " << to_string(mm.expected, f) << ", got " << to_string(mm.actual, f) << '\n';
  }
  return ok;
}

int cmd_commcheck(const Session& s, int m, int n) {
  const LemmaReport r = lemma_equivariance_report(m, n);
  const int code = r.checks_pass() && r.one_leg_all ? ok : check_failed;
  if (s.g_.json) {
    s.emit(to_json(r));
    return code;
  }
  s.out_ << "Z_" << m * n << " -> Z_" << m << " (deck group of order " << n << ")\n";
  for (const auto& c : r.checks) {
    s.out_ << "  " << c.check << ": " << c.status();
    for (const auto& note : c.notes) s.out_ << " (" << note << ")";
    s.out_ << '\n';
  }
  s.out_ << "  one-leg equivariance: " << (r.one_leg_all ? "holds" : "fails") << '\n';
  s.out_ << "  two-leg equivariance: " << (r.two_leg_all ? "holds" : "fails") << '\n';
  for (const auto& c : r.cases) {
    if (!c.two_leg) s.out_ << "    two-leg witness: f = delta" << c.f_index << ", h = " << c.h << '\n';
  }
  return code;
}

struct NumOptions {
  double q = 0.5;
  int fock = 64;
  int cyc = 8;
  double tol = 1e-10;
  int samples = 20;
  int degree = 2;
};

int cmd_numcheck(const Session& s, const NumOptions& o, int n) {
  const MatrixRep rep = MatrixRep::build(MatrixRepConfig{o.q, n, o.fock, o.cyc, o.tol});
  std::vector<NumericResidual> rows = check_relations(rep);
  std::mt19937_64 rng(s.g_.seed);
  const double cross = symbolic_numeric_crosscheck(rep, o.samples, o.degree, rng);
  rows.push_back({"eval(mul(x, y)) = eval(x) eval(y)", cross, 6 * o.degree, cross <= o.tol});
  const SpectrumReport spec = spectrum_check(rep);
  rows.push_back({"spec(bt bt') = {q^(2k)}", spec.max_relative_deviation, 0,
                  spec.diagonal && spec.max_relative_deviation <= o.tol});

  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (s.g_.json) {
    s.emit(to_json(rows));
  } else {
    for (const auto& r : rows) {
      std::ostringstream res;
      res << std::scientific << std::setprecision(3) << r.max_residual;
      s.out_ << (r.pass ? "pass " : "FAIL ") << std::setw(11) << res.str() << "  d=" << std::setw(2)
             << r.margin << "  " << r.relation << '\n';
    }
  }
  return all ? ok : check_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal-form engine for SU_q(2) and its n-fold covering", "qcov"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--n", g.n, "Covering parameter (gt^n = bt)")->check(CLI::Range(1, kMaxOrder));
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--pretty", g.pretty, "Unicode rendering");
  app.add_option("--seed", g.seed, "Seed for randomized sweeps");

  auto with_expr = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-e,--expr,exprs", g.exprs, "Expression(s)");
    return sub;
  };
  CLI::App* norm = with_expr("norm", "Normal form");
  CLI::App* star_cmd = with_expr("star", "Adjoint");
  CLI::App* mul_cmd = with_expr("mul", "Product of two expressions");
  CLI::App* grade_cmd = with_expr("grade", "Split by degree g - gs");
  CLI::App* act = with_expr("act", "Deck action");
  int deck = 1;
  act->add_option("--g", deck, "Deck element m in Z_n")->required();
  CLI::App* delta_cmd = with_expr("delta", "Comultiplication of a base element");
  CLI::App* delta_l = with_expr("deltaL", "Left coaction on M[gt]");
  CLI::App* delta_r = with_expr("deltaR", "Right coaction on M[gt]");
  CLI::App* inner = with_expr("inner", "Inner product sum_g g(x* y)");
  CLI::App* decomp = with_expr("decomp", "Coordinates in M[gt]");
  CLI::App* counter = app.add_subcommand("counterexample", "Replay the obstruction for the canonical candidate");
  CLI::App* comm = app.add_subcommand("commcheck", "Finite commutative control Z_mn -> Z_m");
  int m = 2;
  comm->add_option("--m", m, "Base group order")->check(CLI::PositiveNumber);
  CLI::App* num = app.add_subcommand("numcheck", "Relations in the truncated operator model");
  NumOptions no;
  num->add_option("--q", no.q, "Deformation parameter in (0, 1)");
  num->add_option("--fock", no.fock, "Fock truncation N");
  num->add_option("--cyc", no.cyc, "Cyclic dimension L");
  num->add_option("--tol", no.tol, "Residual tolerance");
  num->add_option("--samples", no.samples, "Random pairs for the symbolic cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_error;
  }

  const bool n_given = app.count("--n") > 0;
  Session s(g, out);
  try {
    if (norm->parsed()) return cmd_norm(s);
    if (star_cmd->parsed()) return cmd_star(s);
    if (mul_cmd->parsed()) return cmd_mul(s);
    if (grade_cmd->parsed()) return cmd_grade(s);
    if (act->parsed()) return cmd_act(s, deck);
    if (delta_cmd->parsed()) return cmd_delta(s);
    if (delta_l->parsed()) return cmd_delta_lr(s, false);
    if (delta_r->parsed()) return cmd_delta_lr(s, true);
    if (inner->parsed()) return cmd_inner(s);
    if (decomp->parsed()) return cmd_decomp(s);
    if (counter->parsed()) return cmd_counterexample(s);
    if (comm->parsed()) return cmd_commcheck(s, m, n_given ? g.n : 2);
    if (num->parsed()) return cmd_numcheck(s, no, n_given ? g.n : 2);
  } catch (const ParseError& e) {
    err << "qcov: " << e.what() << '\n';
    return parse_error;
  } catch (const CLI::ValidationError& e) {
    err << "qcov: " << e.what() << '\n';
    return parse_error;
  } catch (const DomainError& e) {
    err << "qcov: " << e.what() << '\n';
    return domain_error;
  }
  return parse_error;
}

}  // namespace qcov::cli
