#pragma once

#include "atcalc/adequacy.hpp"
#include "atcalc/attack_tree.hpp"
#include "atcalc/ctl.hpp"
#include "atcalc/errors.hpp"
#include "atcalc/infrastructure.hpp"
#include "atcalc/kripke.hpp"

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atcalc::io {

class ScenarioError : public Error {
 public:
  enum class Kind { syntax, unresolved_reference, duplicate_name, schema_violation };

  /// `subject` is the offending name for reference/duplicate errors, a
  /// description otherwise. `path` is a JSON pointer into the document.
  ScenarioError(Kind kind, std::string subject, std::string path, std::size_t line = 0, std::size_t column = 0);

  Kind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::string& path() const noexcept { return path_; }
  /// 1-based; 0 when only a path is known.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

  nlohmann::json to_json() const;

 private:
  Kind kind_;
  std::string subject_;
  std::string path_;
  std::size_t line_;
  std::size_t column_;
};

const char* to_string(ScenarioError::Kind kind) noexcept;

// --- abstract syntax ----------------------------------------------------------

/// State-set expression; names refer to the document's "sets" section.
struct SetExpr {
  enum class Kind {
    ref,
    states,    // raw system state names
    ids,       // explicit state ids
    initial,
    all,
    actor_at,
    datum_at,
    enables,
    owner_is,
    negation,
    conjunction,
    disjunction,
  };

  Kind kind = Kind::all;
  std::string name;                  // ref
  std::vector<std::string> states;   // states
  std::vector<std::uint32_t> ids;    // ids
  infra::Identity actor;             // actor_at, enables
  infra::Location location;          // actor_at, datum_at, enables
  infra::Action action = infra::Action::get;
  std::optional<infra::Payload> payload;    // datum_at
  std::optional<infra::Identity> owner;     // datum_at (optional), owner_is
  std::vector<infra::Payload> payloads;     // owner_is
  std::vector<SetExpr> operands;

  bool operator==(const SetExpr&) const = default;

  static SetExpr reference(std::string name);
};

struct GoalExpr {
  SetExpr pre;
  SetExpr post;

  bool operator==(const GoalExpr&) const = default;
};

struct TreeExpr {
  enum class Kind { ref, base, conjunction, disjunction };

  Kind kind = Kind::base;
  std::string name;
  GoalExpr goal;
  std::vector<TreeExpr> children;

  bool operator==(const TreeExpr&) const = default;
};

struct FormulaExpr {
  using Op = CtlFormula::Op;

  bool is_ref = false;
  std::string name;
  Op op = Op::atom;
  SetExpr atom;
  std::vector<FormulaExpr> operands;

  bool operator==(const FormulaExpr&) const = default;
};

struct Query {
  enum class Kind { check_validity, refine_check, mc, synth, at_ef, atv_ef };

  Kind kind = Kind::check_validity;
  std::optional<TreeExpr> tree;       // check-validity, at-ef, atv-ef
  std::optional<TreeExpr> abstract;   // refine-check
  std::optional<TreeExpr> concrete;   // refine-check
  std::optional<FormulaExpr> formula; // mc
  std::optional<SetExpr> init;        // synth
  std::optional<SetExpr> goal;        // synth
  std::optional<std::uint64_t> depth; // refine-check, atv-ef

  bool operator==(const Query&) const = default;
};

const char* to_string(Query::Kind kind) noexcept;

struct RawSystemDecl {
  std::vector<std::string> states;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> initial;

  bool operator==(const RawSystemDecl&) const = default;
};

struct InfrastructureDecl {
  infra::IGraph graph;
  infra::Rules rules;

  bool operator==(const InfrastructureDecl&) const = default;
};

struct ScenarioDoc {
  std::optional<std::string> description;
  std::optional<RawSystemDecl> system;
  std::optional<InfrastructureDecl> infrastructure;
  std::map<std::string, SetExpr> sets;
  std::map<std::string, TreeExpr> trees;
  std::map<std::string, FormulaExpr> formulas;
  std::map<std::string, Query> queries;

  bool operator==(const ScenarioDoc&) const = default;
};

/// Parses and validates a document. Throws ScenarioError for malformed JSON
/// (with line and column), unknown or duplicate names, and shape violations.
ScenarioDoc parse(std::string_view text);

nlohmann::json to_json(const ScenarioDoc& doc);
nlohmann::json to_json(const TreeExpr& t);
nlohmann::json to_json(const SetExpr& s);
nlohmann::json to_json(const FormulaExpr& f);

/// Canonical text: sorted keys, two-space indentation, trailing newline.
std::string serialize(const ScenarioDoc& doc);
std::string serialize(const nlohmann::json& value);

// --- materialized scenario ------------------------------------------------------

/// A document bound to its explored state space.
class Model {
 public:
  /// Explores the document's system. Throws BoundExceeded, or ScenarioError
  /// for references that only fail against the explored space (state ids).
  static Model load(ScenarioDoc doc, std::size_t bound);

  const ScenarioDoc& doc() const noexcept { return doc_; }
  bool is_infrastructure() const noexcept { return explored_ != nullptr; }
  const TransitionSystem& system() const noexcept;
  const KripkeStructure& kripke() const noexcept { return *kripke_; }
  std::size_t state_count() const noexcept { return system().size(); }
  /// BFS layers of the exploration (infrastructure documents only).
  std::size_t exploration_depth() const noexcept;
  const infra::ExploredInfrastructure* explored() const noexcept { return explored_.get(); }

  std::string state_name(StateId s) const;

  StateSet set(const SetExpr& e) const;
  StateSet named_set(const std::string& name) const;
  AttackTree tree(const TreeExpr& e) const;
  AttackTree named_tree(const std::string& name) const;
  CtlFormula formula(const FormulaExpr& e) const;
  CtlFormula named_formula(const std::string& name) const;

  /// Explicit forms that re-parse against this document.
  SetExpr set_expr(const StateSet& s) const;
  TreeExpr tree_expr(const AttackTree& t) const;

  nlohmann::json set_json(const StateSet& s) const;
  nlohmann::json goal_json(const AttackGoal& g) const;
  nlohmann::json tree_json(const AttackTree& t) const { return to_json(tree_expr(t)); }

 private:
  Model() = default;

  ScenarioDoc doc_;
  std::unique_ptr<TransitionSystem> raw_;
  std::unique_ptr<infra::ExploredInfrastructure> explored_;
  std::unique_ptr<KripkeStructure> kripke_;
  std::map<std::string, StateId> state_index_;
  mutable std::map<std::string, StateSet> set_cache_;
};

/// {"tree", "goal", "kripke", "tree_valid", "ef_holds", "consistent", ...}
nlohmann::json report_json(const AdequacyReport& report, const Model& model);

}  // namespace atcalc::io
