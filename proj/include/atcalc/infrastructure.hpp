#pragma once

#include "atcalc/kripke.hpp"
#include "atcalc/state_set.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace atcalc::infra {

// Actors are identified with their identity strings.
using Identity = std::string;
using Location = std::string;

enum class Action { get, move, eval, put };

const char* to_string(Action a) noexcept;
std::optional<Action> parse_action(std::string_view name) noexcept;

using Payload = std::variant<std::int64_t, std::string>;

std::string to_string(const Payload& p);

/// Decentralized label: an owner plus the identities allowed to read.
struct DlmLabel {
  Identity owner;
  std::set<Identity> readers;

  auto operator<=>(const DlmLabel&) const = default;
};

struct LabelledDatum {
  DlmLabel label;
  Payload payload;

  auto operator<=>(const LabelledDatum&) const = default;
};

std::string to_string(const LabelledDatum& d);

struct Credentials {
  std::set<std::string> credentials;
  std::set<std::string> roles;

  auto operator<=>(const Credentials&) const = default;
};

struct LocationState {
  std::string component;
  std::set<LabelledDatum> data;

  auto operator<=>(const LocationState&) const = default;
};

/// Location graph with actor placement, credentials and labelled data.
struct IGraph {
  std::set<Location> locations;
  std::set<std::pair<Location, Location>> edges;
  std::map<Location, std::set<Identity>> placement;
  std::map<Identity, Credentials> credentials;
  std::map<Location, LocationState> loc_state;

  bool operator==(const IGraph&) const = default;

  /// a @ l
  bool at(const Identity& a, const Location& l) const;
  bool has(const Identity& a, const std::string& credential) const;
  const std::set<LabelledDatum>& data_at(const Location& l) const;
};

/// Policy condition over (acting identity, current graph).
class Condition {
 public:
  enum class Kind { always, has_credential, at_location, exists_at_with_credential, all_of, any_of, negation };

  static Condition always() { return Condition(Kind::always); }
  static Condition has_credential(std::string credential);
  static Condition at(Location l);
  /// ∃n. n @ l ∧ n = actor ∧ has(actor, credential)
  static Condition exists_at_with_credential(Location l, std::string credential);
  static Condition all_of(Condition a, Condition b);
  static Condition any_of(Condition a, Condition b);
  static Condition negation(Condition a);

  Kind kind() const noexcept { return kind_; }
  const Location& location() const noexcept { return location_; }
  const std::string& credential() const noexcept { return credential_; }
  const std::vector<Condition>& operands() const noexcept { return operands_; }

  bool evaluate(const Identity& actor, const IGraph& g) const;

  bool operator==(const Condition&) const = default;

 private:
  explicit Condition(Kind kind) : kind_(kind) {}

  Kind kind_;
  Location location_;
  std::string credential_;
  std::vector<Condition> operands_;
};

struct PolicyClause {
  Condition condition;
  std::set<Action> actions;

  bool operator==(const PolicyClause&) const = default;
};

using LocalPolicies = std::map<Location, std::vector<PolicyClause>>;

/// Datum an actor may create with `put`.
struct PutTemplate {
  Identity actor;
  std::set<Identity> readers;
  Payload payload;

  auto operator<=>(const PutTemplate&) const = default;
};

/// Parts of an infrastructure that no transition changes.
struct Rules {
  LocalPolicies delta;
  bool dlm_enforced = false;
  std::vector<std::string> transforms;
  std::vector<PutTemplate> put_data;

  bool operator==(const Rules&) const = default;
};

/// Pure payload transforms available to `eval`. Applying one never touches
/// the label.
class TransformRegistry {
 public:
  using Fn = std::function<Payload(const Payload&)>;

  /// identity, increment, decrement, negate, redact
  static const TransformRegistry& builtin();

  void add(std::string name, Fn fn);
  bool contains(const std::string& name) const { return fns_.count(name) != 0; }
  /// Throws UnknownTransform.
  const Fn& lookup(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Subset of this registry; throws UnknownTransform for names it lacks.
  TransformRegistry restricted_to(const std::vector<std::string>& names) const;

 private:
  std::map<std::string, Fn> fns_;
};

/// One state of the infrastructure model.
class Infrastructure {
 public:
  /// Validates the graph against the rules; throws std::invalid_argument or
  /// UnknownTransform.
  Infrastructure(IGraph graph, std::shared_ptr<const Rules> rules);

  const IGraph& graph() const noexcept { return graph_; }
  const LocalPolicies& delta() const noexcept { return rules_->delta; }
  bool dlm_enforced() const noexcept { return rules_->dlm_enforced; }
  const Rules& rules() const noexcept { return *rules_; }
  const std::shared_ptr<const Rules>& shared_rules() const noexcept { return rules_; }
  const TransformRegistry& transforms() const noexcept { return *transforms_; }

  /// Same graph, different labelled data / placement.
  Infrastructure with_graph(IGraph g) const;

  bool operator==(const Infrastructure& other) const;

 private:
  Infrastructure(IGraph graph, std::shared_ptr<const Rules> rules,
                 std::shared_ptr<const TransformRegistry> transforms)
      : graph_(std::move(graph)), rules_(std::move(rules)), transforms_(std::move(transforms)) {}

  IGraph graph_;
  std::shared_ptr<const Rules> rules_;
  std::shared_ptr<const TransformRegistry> transforms_;
};

struct InfrastructureHash {
  std::size_t operator()(const Infrastructure& i) const;
};

/// ∃ (p,e) ∈ delta l. a ∈ e ∧ p h. Throws UnknownLocation.
bool enables(const Infrastructure& i, const Location& l, const Identity& h, Action a);

inline const Identity& owner(const LabelledDatum& d) noexcept { return d.label.owner; }
inline const std::set<Identity>& readers(const LabelledDatum& d) noexcept { return d.label.readers; }
// Graph and location are unused; kept so call sites read like the definitions.
inline bool owns(const IGraph&, const Location&, const Identity& a, const LabelledDatum& d) noexcept {
  return owner(d) == a;
}
inline bool has_access(const IGraph& g, const Location& l, const Identity& a, const LabelledDatum& d) {
  return owns(g, l, a, d) || readers(d).count(a) != 0;
}

/// Label-preserving application: result keeps d.label, payload = f(d.payload).
LabelledDatum apply_label_fun(const TransformRegistry& registry, const std::string& name, const LabelledDatum& d);

struct ActionInstance {
  Action action;
  Identity actor;
  Location from;
  Location to;
  std::optional<LabelledDatum> datum;
  std::string transform;

  std::string describe() const;
};

struct Transition {
  ActionInstance action;
  Infrastructure next;
};

/// All successors, in rule order get, move, put, eval and then ascending
/// (identity, locations, datum, transform).
std::vector<Transition> step(const Infrastructure& i);

using ExploredInfrastructure = ExploredSystem<Infrastructure, InfrastructureHash>;

ExploredInfrastructure explore(const Infrastructure& seed, std::size_t bound);

/// States of `explored` satisfying `pred`.
StateSet select(const ExploredInfrastructure& explored, const std::function<bool(const Infrastructure&)>& pred);

// The IoT healthcare scenario.

const std::set<Identity>& gdpr_actors();
const std::set<Location>& gdpr_locations();

/// Patient at home, Doctor at hospital, the Patient-owned datum 42 in the
/// cloud, local policies per location. `negate` is the only eval transform.
Infrastructure gdpr_scenario(bool dlm_enforced);
/// gdpr_scenario with an outside identity Eve placed at the smartphone.
Infrastructure gdpr_eve_scenario(bool dlm_enforced);

/// a ∉ gdpr_actors ⟶ ¬ enables i cloud a get
bool global_policy(const Infrastructure& i, const Identity& a);

/// Every datum whose payload is in `lineage` is owned by `owner`, at every location.
bool ownership_preserved(const Infrastructure& i, const Identity& owner, const std::set<Payload>& lineage);

}  // namespace atcalc::infra
