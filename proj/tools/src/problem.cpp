#include "gcs/cli/problem.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gcs/errors.hpp"
#include "gcs/syntax.hpp"

namespace gcs::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what, 0);
}

int to_int(const std::string& source, int line, const std::string& v) {
  try {
    std::size_t used = 0;
    const int out = std::stoi(v, &used);
    if (used == v.size()) return out;
  } catch (const std::exception&) {
  }
  fail(source, line, "expected an integer, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

std::string require(const std::string& value, const std::string& key) {
  if (value.empty()) throw InvalidArgument("problem is missing '" + key + "'");
  return value;
}

}  // namespace

Problem parse_problem(std::string_view text, std::string source) {
  Problem p;
  p.source = source;
  std::map<std::string, int> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) fail(source, line, "expected 'key: value'");
    const std::string key(trim(s.substr(0, colon)));
    const std::string value(trim(s.substr(colon + 1)));
    if (seen.contains(key)) fail(source, line, "duplicate key '" + key + "' (first on line " + std::to_string(seen[key]) + ")");
    seen[key] = line;

    auto op = [&]() -> OperatorSpec& {
      if (!p.op) p.op.emplace();
      return *p.op;
    };
    auto ansatz = [&]() -> FamilySpec& {
      if (!p.ansatz) p.ansatz.emplace();
      return *p.ansatz;
    };
    auto family = [&]() -> FamilySpec& {
      if (!p.family) p.family.emplace();
      return *p.family;
    };

    if (key == "name") {
      p.name = value;
    } else if (key == "depvar") {
      p.depvar = value;
    } else if (key == "equation.order") {
      p.order = to_int(source, line, value);
    } else if (key == "equation.rhs") {
      p.rhs = value;
    } else if (key == "operator.form") {
      if (value != "reduced" && value != "canonical" && value != "usual") {
        fail(source, line, "operator.form must be reduced, canonical or usual");
      }
      op().form = value;
    } else if (key == "operator.eta") {
      op().eta = value;
    } else if (key == "operator.etacheck") {
      op().etacheck = value;
    } else if (key == "operator.rho") {
      op().rho = to_int(source, line, value);
    } else if (key == "operator.tau") {
      op().tau = value;
    } else if (key == "operator.xi") {
      op().xi = value;
    } else if (key == "ansatz.rho") {
      ansatz().rho = to_int(source, line, value);
    } else if (key == "ansatz.F") {
      ansatz().expr = value;
    } else if (key == "ansatz.params") {
      ansatz().params = split_list(value);
    } else if (key == "family.rho") {
      family().rho = to_int(source, line, value);
    } else if (key == "family.f") {
      family().expr = value;
    } else if (key == "family.params") {
      family().params = split_list(value);
    } else if (key == "oracle.seed") {
      try {
        p.seed = std::stoull(value, nullptr, 0);
      } catch (const std::exception&) {
        fail(source, line, "bad seed '" + value + "'");
      }
    } else if (key == "oracle.points") {
      p.points = to_int(source, line, value);
    } else if (key == "oracle.threshold") {
      try {
        p.threshold = std::stod(value);
      } catch (const std::exception&) {
        fail(source, line, "bad threshold '" + value + "'");
      }
    } else if (key == "expect.operator") {
      if (value != "symmetry" && value != "not-symmetry") fail(source, line, "expect.operator: symmetry | not-symmetry");
      p.expect_symmetry = value == "symmetry";
    } else if (key == "expect.ansatz") {
      if (value != "reducible" && value != "not-reducible") fail(source, line, "expect.ansatz: reducible | not-reducible");
      p.expect_reducible = value == "reducible";
    } else {
      fail(source, line, "unknown key '" + key + "'");
    }
  }
  if (p.op && p.op->form.empty()) p.op->form = p.op->etacheck.empty() ? "reduced" : "canonical";
  return p;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open problem file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  Problem p = parse_problem(ss.str(), path.string());
  if (p.name.empty()) p.name = path.stem().string();
  return p;
}

SamplePlan sample_plan(const Problem& p) {
  SamplePlan plan;
  if (p.seed) plan.seed = *p.seed;
  if (p.points) plan.n_points = *p.points;
  if (p.threshold) plan.threshold = *p.threshold;
  return plan;
}

bool has_equation(const Problem& p) { return p.order.has_value() && !p.rhs.empty(); }

Expr parse_field(const Problem& p, const std::string& field, const std::string& text) {
  try {
    return parse(text, p.depvar);
  } catch (const ParseError& e) {
    throw ParseError(field + ": " + e.what(), e.offset());
  }
}

EvolutionEquation build_equation(const Problem& p, const SamplePlan& plan) {
  if (!p.order) throw InvalidArgument("problem is missing 'equation.order'");
  return EvolutionEquation(*p.order, parse_field(p, "equation.rhs", require(p.rhs, "equation.rhs")), p.depvar, plan);
}

UsualOperator build_usual_operator(const Problem& p) {
  if (!p.op || p.op->form != "usual") throw InvalidArgument("problem has no usual operator");
  auto field = [&](const std::string& name, const std::string& text) {
    return text.empty() ? Expr(0) : parse_field(p, "operator." + name, text);
  };
  return {field("tau", p.op->tau), field("xi", p.op->xi), field("eta", p.op->eta)};
}

GcsOperator build_operator(const Problem& p, const EvolutionEquation* eq, const SamplePlan& plan) {
  if (!p.op) throw InvalidArgument("problem has no operator");
  const auto& o = *p.op;
  if (o.form == "canonical") {
    if (!o.rho) throw InvalidArgument("canonical operator needs 'operator.rho'");
    return GcsOperator::canonical(*o.rho, parse_field(p, "operator.etacheck", require(o.etacheck, "operator.etacheck")));
  }
  if (o.form == "usual") {
    if (!eq) throw InvalidArgument("usual operator needs an equation");
    return usual_to_generalized(*eq, build_usual_operator(p), plan);
  }
  Expr eta = parse_field(p, "operator.eta", require(o.eta, "operator.eta"));
  if (eq && has_t_derivatives(eta)) return to_reduced_form(*eq, eta, plan);
  return GcsOperator::reduced(std::move(eta));
}

Ansatz build_ansatz(const Problem& p, const SamplePlan& plan) {
  if (!p.ansatz) throw InvalidArgument("problem has no ansatz");
  const auto& a = *p.ansatz;
  Expr F = parse_field(p, "ansatz.F", require(a.expr, "ansatz.F"));
  if (a.params.empty()) return Ansatz::with_free_parameters(a.rho, std::move(F), plan);
  return Ansatz(a.rho, std::move(F), a.params, plan);
}

SolutionFamily build_family(const Problem& p) {
  if (!p.family) throw InvalidArgument("problem has no family");
  const auto& f = *p.family;
  return {f.rho, parse_field(p, "family.f", require(f.expr, "family.f")), f.params};
}

}  // namespace gcs::cli
