#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/json_io.hpp"
#include "rfvote/asymptotics.hpp"
#include "rfvote/decomposition.hpp"
#include "rfvote/designer.hpp"
#include "rfvote/errors.hpp"
#include "rfvote/feasibility.hpp"
#include "rfvote/oracle.hpp"
#include "rfvote/prior.hpp"

namespace rfvote::cli {

namespace {

using io::Json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct PriorSource {
  std::string prior;  // inline JSON or a path
  std::vector<std::string> independent;  // n, pi
  int n = 0;  // uniform independent shorthand (oracle only)
};

void add_prior_options(CLI::App* cmd, PriorSource& src, bool allow_n = false) {
  cmd->add_option("--prior", src.prior, "Prior as inline JSON or a path to a JSON file");
  cmd->add_option("--independent", src.independent, "Independent prior: agent count and marginal, e.g. 3 1/2")
      ->expected(2)
      ->type_name("N PI");
  if (allow_n) cmd->add_option("--n", src.n, "Uniform independent prior (pi = 1/2) on N agents");
}

ExchangeablePrior load_prior(const PriorSource& src) {
  const int sources = !src.prior.empty() + !src.independent.empty() + (src.n != 0);
  if (sources != 1) throw UsageError("exactly one prior source is required (--prior or --independent)");
  if (!src.independent.empty()) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(src.independent[0], &used);
      if (used != src.independent[0].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--independent expects an integer agent count, got '" + src.independent[0] + "'");
    }
    return ExchangeablePrior::independent(n, parse_rational(src.independent[1]));
  }
  if (src.n != 0) return ExchangeablePrior::independent(src.n, Rational(1, 2));

  std::string text = src.prior;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') {
    std::ifstream file(src.prior);
    if (!file) throw UsageError("cannot open prior file '" + src.prior + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("prior JSON: ") + e.what());
  }
  return io::prior_from_json(doc);
}

ReducedForm load_q(const std::vector<std::string>& q) {
  if (q.size() != 2) throw UsageError("--q expects two values: Q(a) Q(b)");
  return {parse_rational(q[0]), parse_rational(q[1])};
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "' for this command");
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

// ---- check ----------------------------------------------------------------

int cmd_check(const ExchangeablePrior& prior, const ReducedForm& q, RuleClass rule_class, const std::string& format,
              std::ostream& out) {
  const FeasibilityReport report = check(system_for(rule_class), q, prior);
  if (format == "json") {
    Json doc;
    doc["system"] = std::string(to_string(report.system));
    doc["q"] = io::reduced_form_to_json(q);
    doc["feasible"] = report.feasible;
    Json rows = Json::array();
    for (const auto& s : report.slacks) {
      Json row;
      row["id"] = s.id.str();
      row["family"] = std::string(to_string(s.id.family));
      row["j"] = s.id.j;
      row["slack"] = to_exact_string(s.slack);
      row["slack_decimal"] = to_decimal_string(s.slack);
      row["binding"] = sgn(s.slack) == 0;
      rows.push_back(std::move(row));
    }
    doc["constraints"] = std::move(rows);
    Json binding = Json::array();
    for (const auto& id : report.binding) binding.push_back(id.str());
    doc["binding"] = std::move(binding);
    Json violated = Json::array();
    for (const auto& id : report.violated()) violated.push_back(id.str());
    doc["violated"] = std::move(violated);
    emit_json(out, doc);
  } else {
    out << "system    " << to_string(report.system) << "\n";
    out << "Q         (" << to_exact_string(q.qa) << ", " << to_exact_string(q.qb) << ")\n";
    out << "feasible  " << (report.feasible ? "yes" : "no") << "\n\n";
    std::size_t id_w = 4, exact_w = 5;
    for (const auto& s : report.slacks) {
      id_w = std::max(id_w, s.id.str().size());
      exact_w = std::max(exact_w, to_exact_string(s.slack).size());
    }
    out << pad("id", id_w + 2) << pad("slack", exact_w + 2) << pad("decimal", 20) << "binding\n";
    for (const auto& s : report.slacks) {
      const int sign = sgn(s.slack);
      out << pad(s.id.str(), id_w + 2) << pad(to_exact_string(s.slack), exact_w + 2)
          << pad(to_decimal_string(s.slack), 20) << (sign == 0 ? "binding" : sign < 0 ? "VIOLATED" : "-") << "\n";
    }
  }
  return report.feasible ? kSuccess : kConditionFails;
}

// ---- vertices -------------------------------------------------------------

int cmd_vertices(const ExchangeablePrior& prior, RuleClass rule_class, const std::string& format,
                 std::ostream& out) {
  const VertexSet set = vertices(prior, rule_class);
  if (format == "json") {
    Json doc;
    doc["class"] = std::string(to_string(rule_class));
    Json rows = Json::array();
    for (const auto& v : set.vertices) {
      Json row;
      row["family"] = std::string(to_string(v.rule.family));
      row["quota"] = v.rule.quota;
      const Json point = io::reduced_form_to_json(v.point);
      for (const auto& [k, val] : point.items()) row[k] = val;
      rows.push_back(std::move(row));
    }
    doc["vertices"] = std::move(rows);
    emit_json(out, doc);
  } else if (format == "csv") {
    out << "class,family,quota,qa,qb,qa_decimal,qb_decimal\n";
    for (const auto& v : set.vertices) {
      out << to_string(rule_class) << "," << to_string(v.rule.family) << "," << v.rule.quota << ","
          << to_exact_string(v.point.qa) << "," << to_exact_string(v.point.qb) << ","
          << to_decimal_string(v.point.qa) << "," << to_decimal_string(v.point.qb) << "\n";
    }
  } else {
    out << pad("family", 28) << pad("quota", 7) << pad("Q(a)", 16) << "Q(b)\n";
    for (const auto& v : set.vertices) {
      out << pad(std::string(to_string(v.rule.family)), 28) << pad(std::to_string(v.rule.quota), 7)
          << pad(to_exact_string(v.point.qa), 16) << to_exact_string(v.point.qb) << "\n";
    }
  }
  return kSuccess;
}

// ---- synthesize -----------------------------------------------------------

int cmd_synthesize(const ExchangeablePrior& prior, const ReducedForm& q, RuleClass rule_class, std::ostream& out,
                   std::ostream& err) {
  Json doc;
  doc["class"] = std::string(to_string(rule_class));
  doc["target"] = io::reduced_form_to_json(q);
  try {
    const Synthesis s = synthesize(q, prior, rule_class);
    doc["feasible"] = true;
    doc["rule"] = io::rule_to_json(s.rule);
    Json parts = Json::array();
    for (const auto& part : s.decomposition.parts) {
      const Vertex& v = s.vertex_set.vertices[part.vertex];
      Json row;
      row["vertex"] = part.vertex;
      row["family"] = std::string(to_string(v.rule.family));
      row["quota"] = v.rule.quota;
      row["weight"] = to_exact_string(part.weight);
      row["weight_decimal"] = to_decimal_string(part.weight);
      row["qa"] = to_exact_string(v.point.qa);
      row["qb"] = to_exact_string(v.point.qb);
      parts.push_back(std::move(row));
    }
    doc["certificate"] = std::move(parts);
    doc["reduced_form"] = io::reduced_form_to_json(reduced_form(s.rule, prior));
    doc["monotone"] = is_monotone(s.rule);
    doc["unanimous"] = is_unanimous(s.rule);
    emit_json(out, doc);
    return kSuccess;
  } catch (const InfeasibleError& e) {
    doc["feasible"] = false;
    emit_json(out, doc);
    err << "infeasible: " << e.what() << "\n";
    return kConditionFails;
  }
}

// ---- rawlsian -------------------------------------------------------------

int cmd_rawlsian(const ExchangeablePrior& prior, std::ostream& out) {
  const RawlsianSolution s = rawlsian(prior);
  Json doc;
  doc["j_star"] = s.j_star;
  doc["alpha"] = to_exact_string(s.alpha);
  doc["alpha_decimal"] = to_decimal_string(s.alpha);
  doc["reduced"] = io::reduced_form_to_json(s.reduced);
  doc["rule"] = io::rule_to_json(s.rule);
  doc["objective"] = to_exact_string(s.objective);
  doc["objective_decimal"] = to_decimal_string(s.objective);
  emit_json(out, doc);
  return kSuccess;
}

// ---- obic-free ------------------------------------------------------------

int cmd_obic_free(const ExchangeablePrior& prior, const PriorSource& src, std::ostream& out) {
  const ObicFreeResult r = obic_free_check(prior);
  Json doc;
  doc["holds"] = r.holds;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json row;
    row["j"] = f.j;
    row["branch"] = f.branch == ObicBranch::AType ? "a_type" : "b_type";
    row["lhs"] = to_exact_string(f.lhs);
    row["rhs"] = to_exact_string(f.rhs);
    row["lhs_decimal"] = to_decimal_string(f.lhs);
    row["rhs_decimal"] = to_decimal_string(f.rhs);
    row["witness_quota"] = f.witness_quota;
    failures.push_back(std::move(row));
  }
  doc["failures"] = std::move(failures);
  if (!src.independent.empty()) {
    const ObicFreeIndependentResult ind = obic_free_independent_check(prior.n(), prior.marginal());
    Json sub;
    sub["holds"] = ind.holds;
    sub["failures"] = ind.failures;
    doc["independent"] = std::move(sub);
  }
  emit_json(out, doc);
  return r.holds ? kSuccess : kConditionFails;
}

// ---- asymptotics ----------------------------------------------------------

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> ns;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(item, &used);
      if (used != item.size() || n < 1) throw std::invalid_argument("bad");
      ns.push_back(n);
    } catch (const std::exception&) {
      throw UsageError("--n-list expects comma-separated positive integers, got '" + item + "'");
    }
  }
  if (ns.empty()) throw UsageError("--n-list is empty");
  return ns;
}

int cmd_asymptotics(const std::string& pi_text, const std::string& mu_text, const std::string& n_list,
                    const std::string& format, std::ostream& out) {
  if (pi_text.empty() == mu_text.empty()) throw UsageError("exactly one of --pi or --mu is required");
  const std::vector<int> ns = parse_n_list(n_list);
  const GapTable table = pi_text.empty() ? gap_convergence_fixed_mu(parse_rational(mu_text), ns)
                                         : gap_convergence(parse_rational(pi_text), ns);
  if (format == "json") {
    Json doc;
    doc["regime"] = std::string(to_string(table.regime));
    doc["parameter"] = to_exact_string(table.parameter);
    Json rows = Json::array();
    for (const auto& r : table.rows) {
      Json row;
      row["n"] = r.n;
      row["j"] = r.j;
      row["gap"] = to_decimal_string(r.gap);
      if (r.exact_gap) row["gap_exact"] = to_exact_string(*r.exact_gap);
      row["limit"] = to_decimal_string(r.limit);
      row["error"] = to_decimal_string(r.error);
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    emit_json(out, doc);
  } else {
    out << "regime,n,j,gap,limit,error\n";
    for (const auto& r : table.rows) {
      out << to_string(table.regime) << "," << r.n << "," << r.j << "," << to_decimal_string(r.gap) << ","
          << to_decimal_string(r.limit) << "," << to_decimal_string(r.error) << "\n";
    }
  }
  return kSuccess;
}

// ---- oracle ---------------------------------------------------------------

int cmd_oracle(const ExchangeablePrior& prior, int grid, std::size_t random_rules, std::uint64_t seed,
               std::ostream& out) {
  const oracle::ProjectionReport r = oracle::verify_projection(prior, grid, random_rules, seed);
  Json doc;
  doc["n"] = r.n;
  doc["grid_denominator"] = r.grid_denominator;
  doc["grid_points"] = r.grid_points;
  doc["deterministic_rules"] = r.deterministic_rules;
  doc["random_rules"] = r.random_rules;
  doc["seed"] = seed;
  Json rows = Json::array();
  for (const auto& d : r.disagreements) {
    Json row;
    row["kind"] = d.kind;
    row["qa"] = to_exact_string(d.point.qa);
    row["qb"] = to_exact_string(d.point.qb);
    row["detail"] = d.detail;
    rows.push_back(std::move(row));
  }
  doc["disagreements"] = std::move(rows);
  doc["ok"] = r.ok();
  emit_json(out, doc);
  return r.ok() ? kSuccess : kOracleDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced-form implementability for symmetric two-alternative voting", "rfvote"};
  app.require_subcommand(1);


  PriorSource src;
  std::vector<std::string> q_text;
  std::string class_text = "all";
  std::string format;

  auto* check_cmd = app.add_subcommand("check", "Check whether (Q(a), Q(b)) is implementable; exit 1 if not");
  add_prior_options(check_cmd, src);
  check_cmd->add_option("--q", q_text, "Target reduced form Q(a) Q(b)")->expected(2)->required();
  check_cmd->add_option("--class", class_text, "all | monotone | unanimous")
      ->check(CLI::IsMember({"all", "monotone", "unanimous"}));
  check_cmd->add_option("--format", format, "table | json");

  auto* vert_cmd = app.add_subcommand("vertices", "List polytope vertices counterclockwise");
  add_prior_options(vert_cmd, src);
  vert_cmd->add_option("--class", class_text, "all | monotone | unanimous")
      ->check(CLI::IsMember({"all", "monotone", "unanimous"}));
  vert_cmd->add_option("--format", format, "csv | json | table");

  auto* synth_cmd = app.add_subcommand("synthesize", "Build a rule implementing (Q(a), Q(b)) with a certificate");
  add_prior_options(synth_cmd, src);
  synth_cmd->add_option("--q", q_text, "Target reduced form Q(a) Q(b)")->expected(2)->required();
  synth_cmd->add_option("--class", class_text, "all | monotone | unanimous")
      ->check(CLI::IsMember({"all", "monotone", "unanimous"}));
  synth_cmd->add_option("--format", format, "json");

  auto* rawls_cmd = app.add_subcommand("rawlsian", "Ex-ante Rawlsian monotone rule");
  add_prior_options(rawls_cmd, src);
  rawls_cmd->add_option("--format", format, "json");

  auto* obic_cmd = app.add_subcommand("obic-free", "Check whether every unanimous rule is OBIC; exit 1 if not");
  add_prior_options(obic_cmd, src);
  obic_cmd->add_option("--format", format, "json");

  std::string pi_text, mu_text, n_list = "2,4,8,16,32,64,128,256,512,1024";
  auto* asym_cmd = app.add_subcommand("asymptotics", "Quota-gap tables at fixed pi or fixed mu = n pi");
  asym_cmd->add_option("--pi", pi_text, "Fixed marginal pi");
  asym_cmd->add_option("--mu", mu_text, "Fixed expected count mu");
  asym_cmd->add_option("--n-list", n_list, "Comma-separated agent counts");
  asym_cmd->add_option("--format", format, "csv | json");

  int grid = 16;
  std::size_t random_rules = oracle::kOracleRandomRules;
  std::uint64_t seed = oracle::kOracleSeed;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check inequalities against the vertex hull; exit 3 on mismatch");
  add_prior_options(oracle_cmd, src, true);
  oracle_cmd->add_option("--grid", grid, "Grid denominator")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--random-rules", random_rules, "Number of pseudo-random rules");
  oracle_cmd->add_option("--seed", seed, "Seed for the pseudo-random rules");

  std::vector<const char*> argv{"rfvote"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  try {
    const RuleClass rule_class = parse_rule_class(class_text);
    if (check_cmd->parsed()) {
      if (format.empty()) format = "table";
      require_format(format, {"table", "json"});
      return cmd_check(load_prior(src), load_q(q_text), rule_class, format, out);
    }
    if (vert_cmd->parsed()) {
      if (format.empty()) format = "csv";
      require_format(format, {"csv", "json", "table"});
      return cmd_vertices(load_prior(src), rule_class, format, out);
    }
    if (synth_cmd->parsed()) {
      if (!format.empty()) require_format(format, {"json"});
      return cmd_synthesize(load_prior(src), load_q(q_text), rule_class, out, err);
    }
    if (rawls_cmd->parsed()) {
      if (!format.empty()) require_format(format, {"json"});
      return cmd_rawlsian(load_prior(src), out);
    }
    if (obic_cmd->parsed()) {
      if (!format.empty()) require_format(format, {"json"});
      return cmd_obic_free(load_prior(src), src, out);
    }
    if (asym_cmd->parsed()) {
      if (format.empty()) format = "csv";
      require_format(format, {"csv", "json"});
      return cmd_asymptotics(pi_text, mu_text, n_list, format, out);
    }
    if (oracle_cmd->parsed()) {
      return cmd_oracle(load_prior(src), grid, random_rules, seed, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    if (!subs.empty()) err << subs.front()->help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace rfvote::cli
