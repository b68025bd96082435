#include "atcalc/cli.hpp"

#include "atcalc/adequacy.hpp"
#include "atcalc/attack_tree.hpp"
#include "atcalc/ctl.hpp"
#include "atcalc/errors.hpp"
#include "atcalc/scenario_io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace atcalc::cli {

using nlohmann::json;

std::size_t default_bound() {
  if (const char* env = std::getenv("ATCALC_BOUND")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const unsigned long long value = std::stoull(text, &used);
      if (used == text.size() && value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return kDefaultBound;
}

int exit_code(const json& report) {
  const auto it = report.find("outcome");
  if (it == report.end() || !it->is_string()) return 3;
  const auto& outcome = it->get_ref<const std::string&>();
  if (outcome == "positive") return 0;
  if (outcome == "negative") return 1;
  if (outcome == "inconclusive") return 2;
  return 3;
}

namespace {

const char* outcome(bool positive) { return positive ? "positive" : "negative"; }

class UsageError : public Error {
 public:
  using Error::Error;
};

io::Model load(const std::string& path, std::size_t bound) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read scenario file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return io::Model::load(io::parse(text.str()), bound);
}

json state_list(const io::Model& model, const std::vector<StateId>& path) {
  json out = json::array();
  for (auto s : path) {
    if (model.is_infrastructure()) out.push_back(s.value);
    else out.push_back(model.state_name(s));
  }
  return out;
}

// --- commands --------------------------------------------------------------------

json check_tree(const io::Model& model, const AttackTree& t) {
  const bool valid = is_valid(model.system(), t);
  return json{{"outcome", outcome(valid)}, {"valid", valid}, {"goal", model.goal_json(attack(t))}};
}

json refine(const io::Model& model, const AttackTree& abstract, const AttackTree& concrete, std::size_t depth) {
  const Verdict v = refines_to(abstract, concrete, depth);
  json r{{"verdict", to_string(v)}, {"depth", depth}};
  if (const auto d = refinement_depth(abstract, concrete)) r["derivation_depth"] = *d;
  r["outcome"] = v == Verdict::yes ? "positive" : v == Verdict::no ? "negative" : "inconclusive";
  (void)model;
  return r;
}

json model_check(const io::Model& model, const CtlFormula& f) {
  const auto& k = model.kripke();
  const StateSet sat = denote(k, f);
  const bool holds = k.init().is_subset_of(sat);
  json r{{"outcome", outcome(holds)},
         {"holds", holds},
         {"satisfying", sat.count()},
         {"reachable", k.states().count()},
         {"initial", k.init().count()}};
  if (!holds) r["failing_initial"] = model.set_json(k.init() - sat);
  if (f.op() == CtlFormula::Op::ef && !k.init().empty()) {
    const StateSet targets = denote(k, f.operands()[0]) & k.states();
    if (!targets.empty()) {
      if (const auto path = k.witness_path(*targets.first())) r["witness"] = state_list(model, *path);
    }
  }
  return r;
}

json synth(const io::Model& model, const StateSet& init, const StateSet& goal, const std::string& out_path) {
  if (init.empty()) throw UsageError("synth: initial set is empty");
  const auto tree = synthesize(model.system(), init, goal);
  json r{{"outcome", outcome(tree.has_value())}, {"found", tree.has_value()}};
  if (!tree) return r;
  r["tree"] = model.tree_json(*tree);
  r["size"] = tree->size();
  r["height"] = tree->height();
  if (!out_path.empty()) {
    io::ScenarioDoc doc = model.doc();
    doc.trees.insert_or_assign("witness", model.tree_expr(*tree));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << io::serialize(doc);
    r["written"] = out_path;
  }
  return r;
}

json adequacy(const io::Model& model, const AttackTree& t, bool abstract, std::size_t depth) {
  try {
    const AdequacyReport report =
        abstract ? check_atv_ef(model.system(), t, depth) : check_at_ef(model.system(), t);
    json r = io::report_json(report, model);
    r["mode"] = abstract ? "atv-ef" : "at-ef";
    // Only an exhausted search with EF failing leaves the implication open.
    r["outcome"] = report.antecedent_inconclusive && !report.ef_holds ? "inconclusive" : "positive";
    return r;
  } catch (const EngineInconsistency& e) {
    return json{{"outcome", "negative"}, {"mode", abstract ? "atv-ef" : "at-ef"}, {"consistent", false},
                {"message", e.what()}};
  }
}

json explore(const io::Model& model, bool stats, std::chrono::steady_clock::duration elapsed, std::ostream& err) {
  json r{{"outcome", "positive"},
         {"states", model.state_count()},
         {"transitions", model.system().transition_count()},
         {"reachable", model.kripke().states().count()},
         {"initial", model.kripke().init().count()}};
  if (model.is_infrastructure()) r["depth"] = model.exploration_depth();
  if (stats) {
    std::size_t deadlocks = 0;
    std::size_t max_out = 0;
    for (std::uint32_t s = 0; s < model.state_count(); ++s) {
      const auto n = model.system().successors(StateId{s}).size();
      deadlocks += n == 0;
      max_out = std::max(max_out, n);
    }
    r["deadlocks"] = deadlocks;
    r["max_out_degree"] = max_out;
    err << "explored in " << std::chrono::duration<double, std::milli>(elapsed).count() << " ms\n";
  }
  return r;
}

json run_query(const io::Model& model, const io::Query& q) {
  using K = io::Query::Kind;
  const std::size_t depth = q.depth ? static_cast<std::size_t>(*q.depth) : kDefaultRefinementDepth;
  switch (q.kind) {
    case K::check_validity: return check_tree(model, model.tree(*q.tree));
    case K::refine_check: return refine(model, model.tree(*q.abstract), model.tree(*q.concrete), depth);
    case K::mc: return model_check(model, model.formula(*q.formula));
    case K::synth: return synth(model, model.set(*q.init), model.set(*q.goal), "");
    case K::at_ef: return adequacy(model, model.tree(*q.tree), false, depth);
    case K::atv_ef: return adequacy(model, model.tree(*q.tree), true, depth);
  }
  throw std::logic_error("unhandled query kind");
}

json error_report(const std::string& kind, const std::string& message) {
  return json{{"outcome", "error"}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Attack tree calculus over Kripke structures", "atcalc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::size_t bound = default_bound();
  app.add_option("--bound", bound, "State-space exploration bound (env ATCALC_BOUND)")->check(CLI::PositiveNumber);

  std::string scenario;
  std::string first;
  std::string second;
  std::string third;
  std::string out_path;
  std::size_t depth = kDefaultRefinementDepth;
  bool abstract = false;
  bool stats = false;

  auto with_scenario = [&](CLI::App* sub) {
    sub->add_option("scenario", scenario, "Scenario file")->required();
    sub->add_option("--bound", bound, "State-space exploration bound")->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Check validity of a named attack tree");
  with_scenario(check);
  check->add_option("tree", first, "Tree name")->required();

  auto* refine_cmd = app.add_subcommand("refine", "Decide whether one tree refines to another");
  with_scenario(refine_cmd);
  refine_cmd->add_option("abstract", first, "Abstract tree name")->required();
  refine_cmd->add_option("concrete", second, "Concrete tree name")->required();
  refine_cmd->add_option("--depth", depth, "Derivation depth bound");

  auto* mc = app.add_subcommand("mc", "Model-check a named CTL formula");
  with_scenario(mc);
  mc->add_option("formula", first, "Formula name")->required();

  auto* synth_cmd = app.add_subcommand("synth", "Synthesize a valid attack tree for (init, goal)");
  with_scenario(synth_cmd);
  synth_cmd->add_option("init", first, "Initial set name")->required();
  synth_cmd->add_option("goal", second, "Goal set name")->required();
  synth_cmd->add_option("--out", out_path, "Write the scenario with the tree added as 'witness'");

  auto* adequacy_cmd = app.add_subcommand("adequacy", "Check that a valid tree implies EF of its goal");
  with_scenario(adequacy_cmd);
  adequacy_cmd->add_option("tree", first, "Tree name")->required();
  adequacy_cmd->add_flag("--abstract", abstract, "Use valid refinement as the antecedent");
  adequacy_cmd->add_option("--depth", depth, "Derivation depth bound for --abstract");

  auto* explore_cmd = app.add_subcommand("explore", "Explore the state space and report its size");
  with_scenario(explore_cmd);
  explore_cmd->add_flag("--stats", stats, "Add degree statistics; timing goes to stderr");

  auto* query = app.add_subcommand("query", "Run a named query from the scenario");
  with_scenario(query);
  query->add_option("name", first, "Query name")->required();

  json report;
  std::string command;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    command = app.get_subcommands().front()->get_name();

    const auto start = std::chrono::steady_clock::now();
    const io::Model model = load(scenario, bound);
    const auto elapsed = std::chrono::steady_clock::now() - start;

    if (command == "check") {
      report = check_tree(model, model.named_tree(first));
      report["tree"] = first;
    } else if (command == "refine") {
      report = refine(model, model.named_tree(first), model.named_tree(second), depth);
      report["abstract"] = first;
      report["concrete"] = second;
    } else if (command == "mc") {
      report = model_check(model, model.named_formula(first));
      report["formula"] = first;
    } else if (command == "synth") {
      report = synth(model, model.named_set(first), model.named_set(second), out_path);
      report["init"] = first;
      report["goal"] = second;
    } else if (command == "adequacy") {
      report = adequacy(model, model.named_tree(first), abstract, depth);
      report["tree_name"] = first;
    } else if (command == "explore") {
      report = explore(model, stats, elapsed, err);
    } else {
      const auto& queries = model.doc().queries;
      const auto it = queries.find(first);
      if (it == queries.end()) throw io::ScenarioError(io::ScenarioError::Kind::unresolved_reference, first, "/queries");
      report = run_query(model, it->second);
      report["query"] = first;
      report["kind"] = to_string(it->second.kind);
    }
    report["scenario"] = scenario;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report = error_report("UsageError", e.what());
    err << app.help();
  } catch (const io::ScenarioError& e) {
    report = json{{"outcome", "error"}, {"error", e.to_json()}};
  } catch (const BoundExceeded& e) {
    report = json{{"outcome", "inconclusive"},
                  {"error", {{"kind", "BoundExceeded"}, {"bound", e.bound()}, {"message", e.what()}}}};
  } catch (const UsageError& e) {
    report = error_report("UsageError", e.what());
  } catch (const std::exception& e) {
    report = error_report("InternalError", e.what());
  }
  report["command"] = command.empty() ? json(nullptr) : json(command);
  out << io::serialize(report);
  return exit_code(report);
}

}  // namespace atcalc::cli
