#include "gcs/cli/commands.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "gcs/cli/corpus.hpp"
#include "gcs/errors.hpp"
#include "gcs/integration.hpp"
#include "gcs/syntax.hpp"

namespace gcs::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kTextClip = 240;
const std::vector<double> kProbeXs{0.8, 1.0, 1.3, 1.7, 2.1};
constexpr double kPdeTolerance = 1e-5;

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

std::string clip(const std::string& s) {
  if (s.size() <= kTextClip) return s;
  return s.substr(0, kTextClip) + " ... (" + std::to_string(s.size()) + " chars)";
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

json point_json(const Point& pt, const std::string& depvar) {
  json out = json::object();
  for (const auto& [s, v] : pt) out[symbol_name(s, depvar)] = v;
  return out;
}

std::string point_text(const Point& pt, const std::string& depvar) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, v] : pt) {
    os << (first ? "" : ", ") << symbol_name(s, depvar) << " = " << num(v);
    first = false;
  }
  return "{" + os.str() + "}";
}

json zero_json(const ZeroVerdict& z, const std::string& depvar) {
  json out{{"status", to_string(z.status)}, {"points", z.points_tested}, {"retries", z.domain_retries}};
  if (z.witness) {
    out["witness"] = point_json(*z.witness, depvar);
    out["witness_value"] = z.witness_value;
  }
  if (!z.message.empty()) out["message"] = z.message;
  return out;
}

json header(const std::string& command, const std::string& problem, const SamplePlan& plan) {
  return {{"command", command}, {"problem", problem}, {"seed", hex(plan.seed)}, {"points", plan.n_points},
          {"threshold", plan.threshold}};
}

std::string header_text(const std::string& command, const std::string& problem, const SamplePlan& plan) {
  return command + " " + problem + "  (seed " + hex(plan.seed) + ", " + std::to_string(plan.n_points) +
         " points)\n";
}

json operator_json(const GcsOperator& c, const std::string& depvar) {
  return {{"rho", c.rho()}, {"etacheck", to_string(c.eta_check(), depvar)}};
}

std::string operator_text(const GcsOperator& c, const std::string& depvar) {
  return symbol_name(Symbol::u(c.rho()), depvar) + " = " + clip(to_string(c.eta_check(), depvar));
}

int verdict_exit(Verdict v) {
  if (accepted(v)) return 0;
  return v == Verdict::NotSymmetry ? 1 : 2;
}

struct TripleCheck {
  std::vector<CheckResult> results;
  bool all_accepted = true;
  bool all_rejected = true;
  std::optional<Point> witness;

  bool agreement() const { return all_accepted || all_rejected; }
  Verdict verdict() const {
    if (all_rejected) return Verdict::NotSymmetry;
    if (!all_accepted) return Verdict::Inconclusive;
    for (const auto& r : results) {
      if (r.verdict == Verdict::Probable) return Verdict::Probable;
    }
    return Verdict::Symmetry;
  }
};

TripleCheck run_checks(const EvolutionEquation& eq, const GcsOperator& op, const SamplePlan& plan) {
  TripleCheck out;
  out.results.push_back(check_gcs(eq, op, plan));
  out.results.push_back(check_involutivity(eq, op, plan));
  out.results.push_back(integrability_probe(eq, op, plan));
  for (const auto& r : out.results) {
    out.all_accepted = out.all_accepted && accepted(r.verdict);
    out.all_rejected = out.all_rejected && r.verdict == Verdict::NotSymmetry;
  }
  if (out.all_rejected) {
    // Only coordinates of the constraint manifold: t, x, parameters, u_0..u_{rho-1}.
    std::set<Symbol> context;
    for (const Expr& e : {eq.rhs(), op.characteristic()}) {
      for (const auto& s : free_symbols(e)) {
        if (!s.is_jet() || (s.key.t == 0 && s.key.x < op.rho())) context.insert(s);
      }
    }
    out.witness = common_witness(out.results, plan, context);
  }
  return out;
}

void describe_checks(const TripleCheck& tc, const std::string& depvar, json& j, std::ostringstream& os) {
  j["results"] = json::array();
  for (const auto& r : tc.results) {
    json item{{"method", r.method}, {"verdict", to_string(r.verdict)}, {"residual", to_string(r.residual, depvar)},
              {"zero_test", zero_json(r.zero, depvar)}};
    if (!r.note.empty()) item["note"] = r.note;
    j["results"].push_back(item);
    os << "  " << std::left << std::setw(22) << r.method << std::setw(14) << to_string(r.verdict)
       << "residual: " << clip(to_string(r.residual, depvar)) << "\n";
    if (r.zero.witness && !r.zero.witness->empty()) os << "  " << std::setw(22) << "" << "witness: " << point_text(*r.zero.witness, depvar) << "\n";
    if (r.verdict == Verdict::Inconclusive && !r.note.empty()) os << "  " << std::setw(22) << "" << r.note << "\n";
  }
  j["agreement"] = tc.agreement();
  j["verdict"] = to_string(tc.verdict());
  if (tc.witness) j["common_witness"] = point_json(*tc.witness, depvar);
  os << "agreement: " << (tc.agreement() ? "yes" : "no") << "\n";
  os << "verdict: " << to_string(tc.verdict()) << "\n";
  if (tc.witness) os << "common witness: " << point_text(*tc.witness, depvar) << "\n";
}

std::string param_rate(const std::string& name) { return name + "_t"; }

}  // namespace

std::string Report::render(bool as_json) const {
  if (as_json) return json.dump(2) + "\n";
  return text;
}

SamplePlan effective_plan(const Problem& p, const Options& opts) {
  SamplePlan plan = sample_plan(p);
  if (opts.seed) plan.seed = *opts.seed;
  if (opts.points) plan.n_points = *opts.points;
  if (opts.threshold) plan.threshold = *opts.threshold;
  return plan;
}

Report error_report(const std::string& command, const std::string& message, const Options& opts) {
  Report r;
  r.exit_code = 2;
  const SamplePlan plan = effective_plan(Problem{}, opts);
  r.json = {{"command", command}, {"seed", hex(plan.seed)}, {"error", message}};
  r.text = command + ": error: " + message + "\n";
  return r;
}

Report cmd_check(const Problem& p, const Options& opts) {
  const SamplePlan plan = effective_plan(p, opts);
  const EvolutionEquation eq = build_equation(p, plan);
  const GcsOperator op = build_operator(p, &eq, plan);
  const GcsOperator c = to_canonical(op, plan);
  const TripleCheck tc = run_checks(eq, c, plan);

  Report r;
  std::ostringstream os;
  r.json = header("check", p.name, plan);
  r.json["operator"] = operator_json(c, p.depvar);
  os << header_text("check", p.name, plan);
  os << "constraint: " << operator_text(c, p.depvar) << "\n";
  describe_checks(tc, p.depvar, r.json, os);
  r.text = os.str();
  r.exit_code = tc.agreement() ? verdict_exit(tc.verdict()) : 2;
  return r;
}

Report cmd_reduce(const Problem& p, const Options& opts) {
  const SamplePlan plan = effective_plan(p, opts);
  const EvolutionEquation eq = build_equation(p, plan);
  const Ansatz a = build_ansatz(p, plan);
  const ReductionResult res = reduce(eq, a, plan);

  Report r;
  std::ostringstream os;
  r.json = header("reduce", p.name, plan);
  r.json["ansatz"] = {{"rho", a.rho()}, {"F", to_string(a.F(), p.depvar)}, {"params", a.params()},
                      {"det_phi", to_string(a.det_phi(), p.depvar)}};
  r.json["reducible"] = res.reducible;
  r.json["zero_test"] = zero_json(res.verdict, p.depvar);
  os << header_text("reduce", p.name, plan);
  os << "ansatz: " << p.depvar << " = " << clip(to_string(a.F(), p.depvar)) << "\n";
  os << "det Phi = " << clip(to_string(a.det_phi(), p.depvar)) << "\n";
  if (res.reducible) {
    r.json["G"] = json::array();
    os << "reduced system:\n";
    for (int i = 0; i < a.rho(); ++i) {
      const std::string g = to_string(res.system.G[static_cast<std::size_t>(i)], p.depvar);
      r.json["G"].push_back(g);
      os << "  " << param_rate(a.params()[static_cast<std::size_t>(i)]) << " = " << g << "\n";
    }
    r.exit_code = 0;
  } else {
    const auto idx = static_cast<std::size_t>(res.failing_index);
    r.json["failing_index"] = res.failing_index + 1;
    r.json["failing_param"] = a.params()[idx];
    r.json["residual"] = to_string(res.residual, p.depvar);
    os << "not reducible: d/dx of the right-hand side for " << a.params()[idx] << " is "
       << to_string(res.verdict.status) << "\n";
    os << "  d/dx G = " << clip(to_string(res.residual, p.depvar)) << "\n";
    if (res.verdict.witness) os << "  witness: " << point_text(*res.verdict.witness, p.depvar) << "\n";
    r.exit_code = res.verdict.nonzero() ? 1 : 2;
  }
  r.text = os.str();
  return r;
}

Report cmd_convert(const Problem& p, const Options& opts) {
  const SamplePlan plan = effective_plan(p, opts);
  const EvolutionEquation eq = build_equation(p, plan);
  const GcsOperator op = build_operator(p, &eq, plan);
  const GcsOperator c = to_canonical(op, plan);
  const CheckResult check = check_gcs(eq, c, plan);

  Report r;
  std::ostringstream os;
  r.json = header("convert", p.name, plan);
  r.json["form"] = p.op->form;
  r.json["reduced"] = {{"rho", op.rho()}, {"eta", to_string(op.characteristic(), p.depvar)}};
  r.json["canonical"] = operator_json(c, p.depvar);
  r.json["verdict"] = to_string(check.verdict);
  r.json["zero_test"] = zero_json(check.zero, p.depvar);
  os << header_text("convert", p.name, plan);
  os << "input form: " << p.op->form << "\n";
  os << "reduced:   eta = " << clip(to_string(op.characteristic(), p.depvar)) << "  (order " << op.rho() << ")\n";
  os << "canonical: " << operator_text(c, p.depvar) << "\n";
  os << "determining equation: " << to_string(check.verdict) << "\n";
  r.text = os.str();
  r.exit_code = verdict_exit(check.verdict);
  return r;
}

Report cmd_derive_operator(const Problem& p, const Options& opts) {
  const SamplePlan plan = effective_plan(p, opts);
  const Ansatz a = build_ansatz(p, plan);
  const GcsOperator op = ansatz_to_operator(a, plan);
  const RoundTrip rt = operator_round_trip(a, op, plan);

  Report r;
  std::ostringstream os;
  r.json = header("derive-operator", p.name, plan);
  r.json["operator"] = operator_json(op, p.depvar);
  r.json["round_trip"] = {{"inversion", zero_json(rt.inversion, p.depvar)},
                          {"invariance", zero_json(rt.invariance, p.depvar)},
                          {"ok", rt.ok()}};
  os << header_text("derive-operator", p.name, plan);
  os << "constraint: " << operator_text(op, p.depvar) << "\n";
  os << "round trip: inversion " << to_string(rt.inversion.status) << ", invariance "
     << to_string(rt.invariance.status) << "\n";
  r.exit_code = rt.ok() ? 0 : 1;

  if (p.op) {
    const EvolutionEquation* eqp = nullptr;
    std::optional<EvolutionEquation> eq;
    if (has_equation(p)) {
      eq.emplace(build_equation(p, plan));
      eqp = &*eq;
    }
    const bool same = canonical_equal(op, build_operator(p, eqp, plan), plan);
    r.json["matches_operator"] = same;
    os << "matches given operator: " << (same ? "yes" : "no") << "\n";
  }
  if (has_equation(p)) {
    const EvolutionEquation eq = build_equation(p, plan);
    const CheckResult check = check_gcs(eq, op, plan);
    const ReductionResult red = reduce(eq, a, plan);
    r.json["verdict"] = to_string(check.verdict);
    r.json["reducible"] = red.reducible;
    os << "determining equation: " << to_string(check.verdict) << "\n";
    os << "ansatz reduces: " << (red.reducible ? "yes" : "no") << "\n";
  }
  r.text = os.str();
  return r;
}

Report cmd_verify_solution(const Problem& p, const Options& opts) {
  const SamplePlan plan = effective_plan(p, opts);
  const EvolutionEquation eq = build_equation(p, plan);
  SolutionFamily fam = build_family(p);
  if (fam.rho == 0) fam.rho = static_cast<int>(fam.params.size());
  const SolutionCheck sol = verify_solution(eq, fam.f, plan);

  Report r;
  std::ostringstream os;
  r.json = header("verify-solution", p.name, plan);
  r.json["solution"] = to_string(fam.f, p.depvar);
  r.json["residual_test"] = zero_json(sol.verdict, p.depvar);
  os << header_text("verify-solution", p.name, plan);
  os << p.depvar << " = " << clip(to_string(fam.f, p.depvar)) << "\n";
  os << "solution: " << to_string(sol.verdict.status) << "\n";
  if (sol.verdict.witness) os << "  witness: " << point_text(*sol.verdict.witness, p.depvar) << "\n";

  bool ok = sol.verdict.zero();
  bool negative = sol.verdict.nonzero();
  if (!fam.params.empty()) {
    const Expr det = essentiality_det(fam);
    const ZeroVerdict ev = is_zero(det, plan);
    const bool essential = ev.nonzero();
    r.json["essentiality"] = {{"params", fam.params}, {"det", to_string(det, p.depvar)}, {"essential", essential},
                              {"zero_test", zero_json(ev, p.depvar)}};
    os << "essentiality det = " << clip(to_string(det, p.depvar)) << "  ("
       << (essential ? "all parameters essential" : "inessential") << ")\n";
    ok = ok && essential;
    negative = negative || ev.zero();
  }
  r.json["ok"] = ok;
  r.text = os.str();
  r.exit_code = ok ? 0 : (negative ? 1 : 2);
  return r;
}

// ---------------------------------------------------------------------------
// Demos

namespace {

struct Stage {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

class Demo {
 public:
  Demo(std::string name, const Options& opts) : name_(std::move(name)), opts_(opts) {}

  void stage(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    Stage s{name, false, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      std::tie(s.pass, s.detail) = body();
    } catch (const std::exception& e) {
      s.pass = false;
      s.detail = std::string("error: ") + e.what();
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    stages_.push_back(std::move(s));
  }

  Report finish(const SamplePlan& plan) const {
    Report r;
    bool all = true;
    std::ostringstream os;
    r.json = {{"command", "demo"}, {"demo", name_}, {"seed", hex(plan.seed)}, {"points", plan.n_points},
              {"stages", json::array()}};
    os << "demo " << name_ << "  (seed " << hex(plan.seed) << ", " << plan.n_points << " points)\n";
    for (const auto& s : stages_) {
      all = all && s.pass;
      r.json["stages"].push_back({{"stage", s.name}, {"pass", s.pass}, {"detail", s.detail}, {"seconds", s.seconds}});
      os << "  " << std::left << std::setw(28) << s.name << (s.pass ? "PASS  " : "FAIL  ") << s.detail << "\n";
    }
    r.json["pass"] = all;
    os << (all ? "all stages passed\n" : "some stages failed\n");
    r.text = os.str();
    r.exit_code = all ? 0 : 1;
    return r;
  }

  const Options& opts() const { return opts_; }

 private:
  std::string name_;
  const Options& opts_;
  std::vector<Stage> stages_;
};

std::pair<bool, std::string> checks_stage(const EvolutionEquation& eq, const GcsOperator& op, const SamplePlan& plan) {
  const TripleCheck tc = run_checks(eq, op, plan);
  std::string detail;
  for (const auto& r : tc.results) detail += (detail.empty() ? "" : ", ") + r.method + " " + to_string(r.verdict);
  return {tc.all_accepted, detail};
}

std::pair<bool, std::string> match_stage(const ReductionResult& res, const std::vector<std::string>& expected,
                                         const std::string& depvar, const SamplePlan& plan) {
  if (!res.reducible) return {false, "not reducible"};
  if (res.system.G.size() != expected.size()) return {false, "wrong system size"};
  std::string detail;
  bool ok = true;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const ZeroVerdict v = is_zero(res.system.G[i] - parse(expected[i], depvar), plan);
    ok = ok && v.zero();
    detail += (detail.empty() ? "" : "; ") + param_rate(res.system.params[i]) + " = " + to_string(res.system.G[i], depvar);
    if (!v.zero()) detail += " [" + to_string(v.status) + "]";
  }
  return {ok, detail};
}

std::pair<bool, std::string> integrate_stage(const EvolutionEquation& eq, const Ansatz& a, const ReducedSystem& sys,
                                             const Options& opts, const SamplePlan& plan) {
  double worst = 0.0;
  const auto ics = seeded_initial_conditions(plan.seed, a.rho(), 5);
  for (const auto& ic : ics) {
    const Trajectory tr = integrate_reduced(sys, {opts.step, opts.t0, opts.t1, ic});
    worst = std::max(worst, pde_residual(eq, a, tr, kProbeXs).max_residual);
  }
  return {worst < kPdeTolerance, "5 trajectories, max |u_t - H| = " + num(worst)};
}

Report demo_sl2(const Options& opts) {
  const Problem p = corpus_problem("sl2");
  const SamplePlan plan = effective_plan(p, opts);
  Demo d("sl2", opts);
  const EvolutionEquation eq = build_equation(p, plan);
  const Ansatz a = build_ansatz(p, plan);
  std::optional<GcsOperator> given;
  d.stage("convert", [&] {
    given = to_canonical(build_operator(p, &eq, plan), plan);
    return std::pair{true, operator_text(*given, p.depvar)};
  });
  d.stage("check", [&] { return checks_stage(eq, *given, plan); });
  d.stage("derive-operator", [&] {
    const GcsOperator op = ansatz_to_operator(a, plan);
    const bool ok = operator_round_trip(a, op, plan).ok() && canonical_equal(op, *given, plan);
    return std::pair{ok, ok ? "round trip ok, matches constraint" : "mismatch"};
  });
  std::optional<ReductionResult> res;
  d.stage("reduce", [&] {
    res = reduce(eq, a, plan);
    return match_stage(*res, {"7*phi5 - 4/3*phi4^2", "18*phi6 - 4/3*phi4*phi5", "-5/6*phi5^2 + 2*phi4*phi6"},
                       p.depvar, plan);
  });
  d.stage("integrate", [&] { return integrate_stage(eq, a, res->system, opts, plan); });
  return d.finish(plan);
}

Report demo_fast_diffusion(const Options& opts) {
  const Problem pv = corpus_problem("fast-diffusion-v");
  const Problem pw = corpus_problem("fast-diffusion-w");
  const SamplePlan plan = effective_plan(pw, opts);
  Demo d("fast-diffusion-w", opts);
  const EvolutionEquation eqv = build_equation(pv, plan);
  const EvolutionEquation eqw = build_equation(pw, plan);
  const Ansatz a = build_ansatz(pw, plan);

  std::optional<GcsOperator> q;
  d.stage("convert (v)", [&] {
    q = build_operator(pv, &eqv, plan);
    return std::pair{true, "eta^ = " + clip(to_string(q->eta(), "v"))};
  });
  d.stage("check (v)", [&] { return checks_stage(eqv, *q, plan); });
  const GcsOperator qw = to_canonical(build_operator(pw, &eqw, plan), plan);
  d.stage("check (w)", [&] { return checks_stage(eqw, qw, plan); });
  d.stage("derive-operator (w)", [&] {
    const GcsOperator op = ansatz_to_operator(a, plan);
    const bool ok = operator_round_trip(a, op, plan).ok() && canonical_equal(op, qw, plan);
    return std::pair{ok, operator_text(op, "w")};
  });
  std::optional<ReductionResult> res;
  d.stage("reduce (w)", [&] {
    res = reduce(eqw, a, plan);
    return match_stage(*res, {"0", "24*psi0", "0"}, "w", plan);
  });
  d.stage("integrate (w)", [&] { return integrate_stage(eqw, a, res->system, opts, plan); });
  d.stage("w-family", [&] {
    const SolutionFamily fam = build_family(pw);
    const Expr det = essentiality_det(fam);
    const bool det_ok = is_zero(det - Expr(-16), plan).zero();
    const ReductionResult r0 = reduce(eqw, family_to_ansatz(fam, eqw, plan), plan);
    bool zero = r0.reducible;
    for (const auto& g : r0.system.G) zero = zero && is_zero(g, plan).zero();
    return std::pair{det_ok && zero, "essentiality det = " + to_string(det, "w") +
                                         (zero ? ", reduces to a constant system" : ", reduction not trivial")};
  });
  d.stage("v-solutions", [&] {
    const char* families[] = {
        "(2*x)^(1/2)*(3*c0*x^4 + (24*c0*t + c1)*x^2 - c2)/(c0*x^4 + (24*c0*t + c1)*x^2 + c2)",
        "(2*x)^(1/2)*(3*x^4 + (24*t + c1)*x^2 - c2)/(x^4 + (24*t + c1)*x^2 + c2)",
        "(2*x)^(1/2)*(c1*x^2 - c2)/(c1*x^2 + c2)",
    };
    bool ok = true;
    std::string detail;
    for (const char* f : families) {
      const ZeroVerdict v = verify_solution(eqv, parse(f, "v"), plan).verdict;
      ok = ok && v.zero();
      detail += (detail.empty() ? "" : ", ") + to_string(v.status);
    }
    return std::pair{ok, detail};
  });
  d.stage("v-essentiality", [&] {
    const SolutionFamily fam = build_family(pv);
    const ZeroVerdict v = is_zero(essentiality_det(fam), plan);
    return std::pair{v.nonzero(), "det over (" + fam.params[0] + ", " + fam.params[1] + ") " + to_string(v.status)};
  });
  return d.finish(plan);
}

Report demo_heat(const Options& opts) {
  const Problem p = corpus_problem("heat");
  const Problem pl = corpus_problem("heat-linear");
  const SamplePlan plan = effective_plan(p, opts);
  Demo d("heat", opts);
  const EvolutionEquation eq = build_equation(p, plan);
  std::optional<GcsOperator> op;
  d.stage("convert", [&] {
    op = to_canonical(build_operator(p, &eq, plan), plan);
    return std::pair{op->rho() == 1 && op->eta_check().is_zero(), operator_text(*op, p.depvar)};
  });
  d.stage("check", [&] { return checks_stage(eq, *op, plan); });
  const Ansatz a1 = build_ansatz(p, plan);
  const Ansatz a2 = build_ansatz(pl, plan);
  d.stage("derive-operator", [&] {
    const bool ok = canonical_equal(ansatz_to_operator(a1, plan), *op, plan) &&
                    operator_round_trip(a2, ansatz_to_operator(a2, plan), plan).ok();
    return std::pair{ok, operator_text(ansatz_to_operator(a2, plan), p.depvar)};
  });
  std::optional<ReductionResult> r1, r2;
  d.stage("reduce", [&] {
    r1 = reduce(eq, a1, plan);
    r2 = reduce(eq, a2, plan);
    auto m1 = match_stage(*r1, {"0"}, p.depvar, plan);
    auto m2 = match_stage(*r2, {"0", "0"}, p.depvar, plan);
    return std::pair{m1.first && m2.first, "u = " + to_string(a1.F(), p.depvar) + ": " + m1.second + " | u = " +
                                               to_string(a2.F(), p.depvar) + ": " + m2.second};
  });
  d.stage("integrate", [&] {
    auto s1 = integrate_stage(eq, a1, r1->system, opts, plan);
    auto s2 = integrate_stage(eq, a2, r2->system, opts, plan);
    return std::pair{s1.first && s2.first, s2.second};
  });
  d.stage("family", [&] {
    const SolutionFamily fam = build_family(pl);
    const ReductionResult r0 = reduce(eq, family_to_ansatz(fam, eq, plan), plan);
    bool zero = r0.reducible;
    for (const auto& g : r0.system.G) zero = zero && g.is_zero();
    return std::pair{zero, "essentiality det = " + to_string(essentiality_det(fam), p.depvar)};
  });
  return d.finish(plan);
}

}  // namespace

Report cmd_demo(const std::string& name, const Options& opts) {
  if (name == "sl2") return demo_sl2(opts);
  if (name == "fast-diffusion-w") return demo_fast_diffusion(opts);
  if (name == "heat") return demo_heat(opts);
  throw InvalidArgument("unknown demo '" + name + "' (expected sl2, fast-diffusion-w or heat)");
}

}  // namespace gcs::cli
