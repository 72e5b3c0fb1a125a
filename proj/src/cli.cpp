#include "dclpc/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "dclpc/axioms.hpp"
#include "dclpc/control.hpp"
#include "dclpc/decision.hpp"
#include "dclpc/errors.hpp"
#include "dclpc/model_json.hpp"
#include "dclpc/normal_form.hpp"
#include "dclpc/semantics.hpp"
#include "dclpc/syntax.hpp"
#include "json.hpp"

namespace dclpc {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

DirectModel load_model(const std::string& path) {
  try {
    return parse_model(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.message(), e.line(), e.column());
  }
}

std::string join(std::span<const std::string> names, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += sep;
    out += names[i];
  }
  return out;
}

std::string signature_line(const Signature& sig) {
  return "signature: agents " + join(sig.agents()) + "; vars " + join(sig.vars());
}

json signature_json(const Signature& sig) {
  return {{"agents", std::vector<std::string>(sig.agents().begin(), sig.agents().end())},
          {"vars", std::vector<std::string>(sig.vars().begin(), sig.vars().end())}};
}

// Options shared by the commands that take a formula and an optional
// signature override.
struct SignatureOptions {
  std::string agents;
  std::string vars;
};

void add_signature_options(CLI::App* cmd, SignatureOptions& o) {
  cmd->add_option("--agents", o.agents, "Comma-separated agent names");
  cmd->add_option("--vars", o.vars, "Comma-separated variable names");
}

// Parses the formulas and settles the signature. Given lists win; a missing
// list is taken from the default signature of the formulas.
std::pair<std::vector<Formula>, Signature> formulas_and_signature(const std::vector<std::string>& texts,
                                                                  const CLI::App* cmd, const SignatureOptions& o) {
  const bool has_agents = cmd->count("--agents") > 0;
  const bool has_vars = cmd->count("--vars") > 0;
  std::optional<Signature> explicit_sig;
  if (has_agents && has_vars) {
    explicit_sig = Signature(parse_identifier_list(o.agents), parse_identifier_list(o.vars));
  }
  std::vector<Formula> formulas;
  for (const auto& t : texts) formulas.push_back(parse_formula(t, explicit_sig ? &*explicit_sig : nullptr));
  if (explicit_sig) return {formulas, *explicit_sig};

  Formula joint = conjoin(formulas);
  const Signature fallback = default_signature(joint);
  std::vector<std::string> agents = has_agents ? parse_identifier_list(o.agents)
                                               : std::vector<std::string>(fallback.agents().begin(), fallback.agents().end());
  std::vector<std::string> vars = has_vars ? parse_identifier_list(o.vars)
                                           : std::vector<std::string>(fallback.vars().begin(), fallback.vars().end());
  return {formulas, Signature(std::move(agents), std::move(vars))};
}

void print_model_block(std::ostream& out, const std::string& heading, const DirectModel& m) {
  out << "# " << heading << "\n" << render_model(m);
}

std::string valuation_text(const Signature& sig, const ValuationSet& entry) {
  if (entry.empty()) return "false";
  if (entry.full()) return "true";
  std::string out;
  for (Valuation v : entry.members()) {
    if (!out.empty()) out += " | ";
    out += render(valuation_description(sig, v));
  }
  return out;
}

json allocation_json(const Signature& sig, const Allocation& alloc) {
  json owns = json::object();
  for (std::size_t a = 0; a < sig.agent_count(); ++a) {
    std::vector<std::string> cell;
    for (std::size_t v = 0; v < sig.var_count(); ++v) {
      if (alloc.owner(v) == a) cell.push_back(sig.var(v));
    }
    owns[sig.agent(a)] = cell;
  }
  return owns;
}

json valuation_json(const Signature& sig, Valuation v) {
  std::vector<std::string> truths;
  for (std::size_t i = 0; i < sig.var_count(); ++i) {
    if (v.test(i)) truths.push_back(sig.var(i));
  }
  return truths;
}

Coalition parse_coalition(std::string text) {
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  const auto names = parse_identifier_list(text);
  return Coalition(names.begin(), names.end());
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checking and decision procedures for propositional control with transfer programs", "dclpc"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print one JSON record per result");

  std::string model_path;
  std::string formula_text;
  std::string formula_file;
  std::string program_text;

  auto* check = app.add_subcommand("check", "Evaluate a formula in a model");
  check->add_option("--model", model_path, "Model file")->required();
  auto* f_opt = check->add_option("--formula", formula_text, "Formula text");
  auto* ff_opt = check->add_option("--formula-file", formula_file, "File holding the formula");
  f_opt->excludes(ff_opt);
  check->require_option(1, 0);

  auto* run = app.add_subcommand("run", "List every model a program can reach");
  run->add_option("--model", model_path, "Model file")->required();
  run->add_option("--program", program_text, "Program text")->required();

  std::string sat_text;
  SignatureOptions sat_sig;
  auto* sat = app.add_subcommand("sat", "Find a model of a formula");
  sat->add_option("formula", sat_text, "Formula text")->required();
  add_signature_options(sat, sat_sig);

  std::string valid_text;
  SignatureOptions valid_sig;
  auto* valid_cmd = app.add_subcommand("valid", "Check a formula in every model of a signature");
  valid_cmd->add_option("formula", valid_text, "Formula text")->required();
  add_signature_options(valid_cmd, valid_sig);

  std::string equiv_a;
  std::string equiv_b;
  SignatureOptions equiv_sig;
  auto* equiv = app.add_subcommand("equiv", "Compare two formulas on every model of a signature");
  equiv->add_option("first", equiv_a, "Formula text")->required();
  equiv->add_option("second", equiv_b, "Formula text")->required();
  add_signature_options(equiv, equiv_sig);

  std::string nf_text;
  SignatureOptions nf_sig;
  bool nf_formula = false;
  auto* nf = app.add_subcommand("nf", "Print the normal-form table of a formula");
  nf->add_option("formula", nf_text, "Formula text")->required();
  nf->add_option("--agents", nf_sig.agents, "Comma-separated agent names")->required();
  nf->add_option("--vars", nf_sig.vars, "Comma-separated variable names")->required();
  nf->add_flag("--reconstruct", nf_formula, "Also print the formula rebuilt from the table");

  std::string coalition_text;
  std::string agent;
  bool second_order = false;
  auto* ctl = app.add_subcommand("controls", "Decide first- or second-order control in a model");
  ctl->add_option("--model", model_path, "Model file")->required();
  ctl->add_option("--formula", formula_text, "Formula text")->required();
  ctl->add_option("--coalition", coalition_text, "Comma-separated agents, or {} for none");
  ctl->add_flag("--second-order", second_order, "Decide CONTROLS for --agent");
  ctl->add_option("--agent", agent, "Agent for --second-order");

  std::size_t ax_agents = 0;
  std::size_t ax_vars = 0;
  AxiomBudget budget;
  bool mutations = false;
  auto* ax = app.add_subcommand("axioms", "Check every axiom and theorem scheme over a numbered signature");
  ax->add_option("--agents", ax_agents, "Number of agents")->required()->check(CLI::Range(1, 8));
  ax->add_option("--vars", ax_vars, "Number of variables")->required()->check(CLI::Range(1, 6));
  ax->add_option("--depth", budget.max_depth, "Depth of pooled formulas")->check(CLI::Range(0, 4));
  ax->add_option("--max-instances", budget.max_instances, "Instances per scheme before sampling");
  ax->add_option("--seed", budget.seed, "Seed for pools and sampling");
  ax->add_flag("--mutations", mutations, "Also run the broken variants, which must fail");

  std::vector<std::string> argv_store{"dclpc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsageError;
  }

  try {
    if (check->parsed()) {
      const DirectModel m = load_model(model_path);
      const std::string text = formula_file.empty() ? formula_text : read_file(formula_file);
      const Formula f = parse_formula(text, &m.signature());
      const bool result = eval(m, f);
      if (as_json) {
        out << json{{"command", "check"}, {"formula", render(f)}, {"result", result}}.dump() << "\n";
      } else {
        out << (result ? "true" : "false") << "\n";
      }
      return result ? kPositive : kNegative;
    }

    if (run->parsed()) {
      const DirectModel m = load_model(model_path);
      const Program p = parse_program(program_text, &m.signature());
      const auto image = program_image(m, p);
      if (as_json) {
        json models = json::array();
        for (const auto& r : image) models.push_back(model_to_json(r));
        out << json{{"command", "run"}, {"program", render(p)}, {"models", models}}.dump() << "\n";
      } else {
        out << "# " << image.size() << " result model" << (image.size() == 1 ? "" : "s") << "\n";
        for (std::size_t i = 0; i < image.size(); ++i) print_model_block(out, "model " + std::to_string(i + 1), image[i]);
      }
      return kPositive;
    }

    if (sat->parsed() || valid_cmd->parsed()) {
      const bool is_sat = sat->parsed();
      const auto [fs, sig] =
          formulas_and_signature({is_sat ? sat_text : valid_text}, is_sat ? sat : valid_cmd, is_sat ? sat_sig : valid_sig);
      const auto model = is_sat ? satisfiable(fs[0], sig) : counterexample(fs[0], sig);
      const bool positive = is_sat == model.has_value();
      const char* verdict = is_sat ? (positive ? "satisfiable" : "unsatisfiable") : (positive ? "valid" : "not valid");
      if (as_json) {
        json rec{{"command", is_sat ? "sat" : "valid"}, {"formula", render(fs[0])}, {"result", positive},
                 {"signature", signature_json(sig)}};
        if (model) rec[is_sat ? "witness" : "counterexample"] = model_to_json(*model);
        out << rec.dump() << "\n";
      } else {
        out << verdict << "\n" << signature_line(sig) << "\n";
        if (model) print_model_block(out, is_sat ? "witness" : "counterexample", *model);
      }
      return positive ? kPositive : kNegative;
    }

    if (equiv->parsed()) {
      const auto [fs, sig] = formulas_and_signature({equiv_a, equiv_b}, equiv, equiv_sig);
      const auto witness = counterexample(iff(fs[0], fs[1]), sig);
      if (as_json) {
        json rec{{"command", "equiv"}, {"result", !witness}, {"signature", signature_json(sig)}};
        if (witness) rec["distinguishing_model"] = model_to_json(*witness);
        out << rec.dump() << "\n";
      } else {
        out << (witness ? "not equivalent" : "equivalent") << "\n" << signature_line(sig) << "\n";
        if (witness) print_model_block(out, "distinguishing model", *witness);
      }
      return witness ? kNegative : kPositive;
    }

    if (nf->parsed()) {
      const Signature sig(parse_identifier_list(nf_sig.agents), parse_identifier_list(nf_sig.vars));
      const Formula f = parse_formula(nf_text, &sig);
      const NormalForm table = normal_form(f, sig);
      if (as_json) {
        json rows = json::array();
        for (std::size_t a = 0; a < table.table.size(); ++a) {
          json vals = json::array();
          for (Valuation v : table.table[a].members()) vals.push_back(valuation_json(sig, v));
          rows.push_back({{"allocation", allocation_json(sig, allocation_at(sig, a))}, {"valuations", vals}});
        }
        json rec{{"command", "nf"}, {"signature", signature_json(sig)}, {"table", rows}};
        if (nf_formula) rec["formula"] = render(nf_to_formula(table));
        out << rec.dump() << "\n";
      } else {
        out << signature_line(sig) << "\n";
        for (std::size_t a = 0; a < table.table.size(); ++a) {
          out << render(allocation_description(sig, allocation_at(sig, a))) << ": "
              << valuation_text(sig, table.table[a]) << "\n";
        }
        if (nf_formula) out << "formula: " << render(nf_to_formula(table)) << "\n";
      }
      return kPositive;
    }

    if (ctl->parsed()) {
      const DirectModel m = load_model(model_path);
      const Formula f = parse_formula(formula_text, &m.signature());
      if (second_order) {
        if (agent.empty()) throw UsageError("--second-order needs --agent");
        const bool direct = eval(m, second_order_controls(agent, f, m.signature()));
        const bool by_table =
            characterize_second_order(m.signature(), m.allocation(), m.valuation(), agent, f);
        if (as_json) {
          out << json{{"command", "controls"}, {"order", 2}, {"agent", agent}, {"result", direct},
                      {"characterization", by_table}, {"agree", direct == by_table}}
                     .dump()
              << "\n";
        } else {
          out << (direct ? "true" : "false") << "\n"
              << "characterization: " << (by_table ? "true" : "false") << (direct == by_table ? " (agrees)" : " (DISAGREES)")
              << "\n";
        }
        return direct ? kPositive : kNegative;
      }
      if (ctl->count("--coalition") == 0) throw UsageError("controls needs --coalition (or --second-order --agent)");
      const Coalition c = parse_coalition(coalition_text);
      const bool result = eval(m, controls(c, f));
      if (as_json) {
        out << json{{"command", "controls"}, {"order", 1}, {"coalition", std::vector<std::string>(c.begin(), c.end())},
                    {"result", result}}
                   .dump()
            << "\n";
      } else {
        out << (result ? "true" : "false") << "\n";
      }
      return result ? kPositive : kNegative;
    }

    if (ax->parsed()) {
      const Signature sig = numbered_signature(ax_agents, ax_vars);
      const AxiomReport report = axiom_suite(sig, budget);
      std::optional<AxiomReport> broken;
      if (mutations) broken = mutation_suite(sig, budget);
      bool ok = report.sound();
      if (broken) {
        for (const auto& s : broken->schemes) ok = ok && !s.counterexamples.empty();
      }
      if (as_json) {
        json schemes = json::array();
        const auto add = [&](const SchemeReport& s, bool mutation) {
          json rec{{"name", s.name}, {"group", s.group}, {"instances", s.instances}, {"space", s.space},
                   {"sampled", s.truncated}, {"counterexamples", s.counterexamples.size()}, {"mutation", mutation}};
          if (!s.counterexamples.empty()) {
            rec["first_counterexample"] = {{"instance", render(s.counterexamples.front().instance)},
                                           {"model", model_to_json(s.counterexamples.front().model)}};
          }
          schemes.push_back(rec);
        };
        for (const auto& s : report.schemes) add(s, false);
        if (broken) {
          for (const auto& s : broken->schemes) add(s, true);
        }
        out << json{{"command", "axioms"}, {"signature", signature_json(sig)}, {"sound", report.sound()},
                    {"ok", ok}, {"schemes", schemes}}
                   .dump()
            << "\n";
      } else {
        out << signature_line(sig) << "\n";
        std::size_t failures = 0;
        for (const auto& s : report.schemes) {
          out << (s.counterexamples.empty() ? "ok   " : "FAIL ") << s.name << ": " << s.instances << " instances";
          if (s.truncated) out << " (sampled from " << s.space << ")";
          out << "\n";
          if (!s.counterexamples.empty()) {
            ++failures;
            out << "  instance: " << render(s.counterexamples.front().instance) << "\n";
            print_model_block(out, "counterexample", s.counterexamples.front().model);
          }
        }
        if (broken) {
          for (const auto& s : broken->schemes) {
            out << "mutation " << s.name << ": " << (s.counterexamples.empty() ? "MISSED" : "caught") << "\n";
          }
        }
        out << report.schemes.size() << " schemes, " << report.instance_count() << " instances, " << failures
            << " failing\n";
      }
      return ok ? kPositive : kNegative;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SignatureError& e) {
    err << "signature error: " << e.what() << "\n";
    return kSignatureError;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kSignatureError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kSignatureError;
  }
  return kUsageError;
}

}  // namespace dclpc
