#include "atcalc/infrastructure.hpp"

#include "atcalc/errors.hpp"

#include <boost/container_hash/hash.hpp>

#include <sstream>
#include <stdexcept>

namespace atcalc::infra {

const char* to_string(Action a) noexcept {
  switch (a) {
    case Action::get: return "get";
    case Action::move: return "move";
    case Action::eval: return "eval";
    case Action::put: return "put";
  }
  return "?";
}

std::optional<Action> parse_action(std::string_view name) noexcept {
  if (name == "get") return Action::get;
  if (name == "move") return Action::move;
  if (name == "eval") return Action::eval;
  if (name == "put") return Action::put;
  return std::nullopt;
}

std::string to_string(const Payload& p) {
  if (const auto* n = std::get_if<std::int64_t>(&p)) return std::to_string(*n);
  return '"' + std::get<std::string>(p) + '"';
}

std::string to_string(const LabelledDatum& d) {
  std::ostringstream os;
  os << "((" << d.label.owner << ",{";
  bool first = true;
  for (const auto& r : d.label.readers) {
    os << (first ? "" : ",") << r;
    first = false;
  }
  os << "})," << to_string(d.payload) << ')';
  return os.str();
}

// --- IGraph ---------------------------------------------------------------

bool IGraph::at(const Identity& a, const Location& l) const {
  const auto it = placement.find(l);
  return it != placement.end() && it->second.count(a) != 0;
}

bool IGraph::has(const Identity& a, const std::string& credential) const {
  const auto it = credentials.find(a);
  return it != credentials.end() && it->second.credentials.count(credential) != 0;
}

const std::set<LabelledDatum>& IGraph::data_at(const Location& l) const {
  static const std::set<LabelledDatum> kNone;
  const auto it = loc_state.find(l);
  return it == loc_state.end() ? kNone : it->second.data;
}

// --- Condition --------------------------------------------------------------

Condition Condition::has_credential(std::string credential) {
  Condition c(Kind::has_credential);
  c.credential_ = std::move(credential);
  return c;
}

Condition Condition::at(Location l) {
  Condition c(Kind::at_location);
  c.location_ = std::move(l);
  return c;
}

Condition Condition::exists_at_with_credential(Location l, std::string credential) {
  Condition c(Kind::exists_at_with_credential);
  c.location_ = std::move(l);
  c.credential_ = std::move(credential);
  return c;
}

Condition Condition::all_of(Condition a, Condition b) {
  Condition c(Kind::all_of);
  c.operands_ = {std::move(a), std::move(b)};
  return c;
}

Condition Condition::any_of(Condition a, Condition b) {
  Condition c(Kind::any_of);
  c.operands_ = {std::move(a), std::move(b)};
  return c;
}

Condition Condition::negation(Condition a) {
  Condition c(Kind::negation);
  c.operands_ = {std::move(a)};
  return c;
}

bool Condition::evaluate(const Identity& actor, const IGraph& g) const {
  switch (kind_) {
    case Kind::always: return true;
    case Kind::has_credential: return g.has(actor, credential_);
    case Kind::at_location: return g.at(actor, location_);
    case Kind::exists_at_with_credential: return g.at(actor, location_) && g.has(actor, credential_);
    case Kind::all_of: return operands_[0].evaluate(actor, g) && operands_[1].evaluate(actor, g);
    case Kind::any_of: return operands_[0].evaluate(actor, g) || operands_[1].evaluate(actor, g);
    case Kind::negation: return !operands_[0].evaluate(actor, g);
  }
  return false;
}

// --- transforms ---------------------------------------------------------------

const TransformRegistry& TransformRegistry::builtin() {
  // Integer transforms wrap around instead of overflowing.
  static constexpr auto wrap = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
  static const TransformRegistry registry = [] {
    TransformRegistry r;
    r.add("identity", [](const Payload& p) { return p; });
    r.add("increment", [](const Payload& p) -> Payload {
      if (const auto* n = std::get_if<std::int64_t>(&p)) return wrap(static_cast<std::uint64_t>(*n) + 1);
      return p;
    });
    r.add("decrement", [](const Payload& p) -> Payload {
      if (const auto* n = std::get_if<std::int64_t>(&p)) return wrap(static_cast<std::uint64_t>(*n) - 1);
      return p;
    });
    r.add("negate", [](const Payload& p) -> Payload {
      if (const auto* n = std::get_if<std::int64_t>(&p)) return wrap(0 - static_cast<std::uint64_t>(*n));
      return p;
    });
    r.add("redact", [](const Payload&) -> Payload { return std::string("redacted"); });
    return r;
  }();
  return registry;
}

void TransformRegistry::add(std::string name, Fn fn) { fns_[std::move(name)] = std::move(fn); }

const TransformRegistry::Fn& TransformRegistry::lookup(const std::string& name) const {
  const auto it = fns_.find(name);
  if (it == fns_.end()) throw UnknownTransform(name);
  return it->second;
}

std::vector<std::string> TransformRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, fn] : fns_) out.push_back(name);
  return out;
}

TransformRegistry TransformRegistry::restricted_to(const std::vector<std::string>& names) const {
  TransformRegistry r;
  for (const auto& name : names) r.add(name, lookup(name));
  return r;
}

LabelledDatum apply_label_fun(const TransformRegistry& registry, const std::string& name, const LabelledDatum& d) {
  return LabelledDatum{d.label, registry.lookup(name)(d.payload)};
}

// --- Infrastructure -----------------------------------------------------------

namespace {

void validate(const IGraph& g, const Rules& rules) {
  auto require_location = [&](const Location& l, const char* what) {
    if (g.locations.count(l) == 0) throw std::invalid_argument(std::string(what) + " names unknown location '" + l + "'");
  };
  for (const auto& [from, to] : g.edges) {
    require_location(from, "edge");
    require_location(to, "edge");
  }
  for (const auto& [l, actors] : g.placement) {
    require_location(l, "placement");
    for (const auto& a : actors) {
      if (a.empty()) throw std::invalid_argument("empty identity placed at '" + l + "'");
      if (g.credentials.count(a) == 0)
        throw std::invalid_argument("placed identity '" + a + "' has no credentials entry");
    }
  }
  for (const auto& [l, st] : g.loc_state) require_location(l, "location state");
  for (const auto& [l, clauses] : rules.delta) require_location(l, "policy");
  for (const auto& t : rules.put_data) {
    if (g.credentials.count(t.actor) == 0)
      throw std::invalid_argument("put template for undeclared identity '" + t.actor + "'");
  }
}

}  // namespace

Infrastructure::Infrastructure(IGraph graph, std::shared_ptr<const Rules> rules)
    : graph_(std::move(graph)), rules_(std::move(rules)) {
  if (!rules_) throw std::invalid_argument("infrastructure without rules");
  validate(graph_, *rules_);
  for (const auto& l : graph_.locations) {
    graph_.placement.try_emplace(l);
    graph_.loc_state.try_emplace(l);
  }
  transforms_ = std::make_shared<const TransformRegistry>(TransformRegistry::builtin().restricted_to(rules_->transforms));
}

Infrastructure Infrastructure::with_graph(IGraph g) const { return Infrastructure(std::move(g), rules_, transforms_); }

bool Infrastructure::operator==(const Infrastructure& other) const {
  return graph_ == other.graph_ && (rules_ == other.rules_ || *rules_ == *other.rules_);
}

namespace {

std::size_t hash_payload(const Payload& p) { return std::hash<Payload>{}(p); }

}  // namespace

std::size_t InfrastructureHash::operator()(const Infrastructure& i) const {
  std::size_t seed = 0;
  const IGraph& g = i.graph();
  for (const auto& [l, actors] : g.placement) {
    boost::hash_combine(seed, l);
    for (const auto& a : actors) boost::hash_combine(seed, a);
  }
  for (const auto& [l, st] : g.loc_state) {
    boost::hash_combine(seed, l);
    boost::hash_combine(seed, st.component);
    for (const auto& d : st.data) {
      boost::hash_combine(seed, d.label.owner);
      for (const auto& r : d.label.readers) boost::hash_combine(seed, r);
      boost::hash_combine(seed, hash_payload(d.payload));
    }
  }
  return seed;
}

bool enables(const Infrastructure& i, const Location& l, const Identity& h, Action a) {
  if (i.graph().locations.count(l) == 0) throw UnknownLocation(l);
  const auto it = i.delta().find(l);
  if (it == i.delta().end()) return false;
  for (const auto& clause : it->second) {
    if (clause.actions.count(a) != 0 && clause.condition.evaluate(h, i.graph())) return true;
  }
  return false;
}

// --- transitions ------------------------------------------------------------

std::string ActionInstance::describe() const {
  std::ostringstream os;
  os << to_string(action) << '(' << actor;
  switch (action) {
    case Action::get: os << ", " << from << " <- " << to << ", " << to_string(*datum); break;
    case Action::move: os << ", " << from << " -> " << to; break;
    case Action::put: os << ", " << from << ", " << to_string(*datum); break;
    case Action::eval: os << ", " << from << ", " << transform << ", " << to_string(*datum); break;
  }
  os << ')';
  return os.str();
}

std::vector<Transition> step(const Infrastructure& i) {
  const IGraph& g = i.graph();
  // (identity, location) pairs in lexicographic order.
  std::set<std::pair<Identity, Location>> actors;
  for (const auto& [l, ids] : g.placement)
    for (const auto& a : ids) actors.emplace(a, l);

  std::vector<Transition> out;

  for (const auto& [a, l] : actors) {
    for (const auto& source : g.locations) {
      if (!enables(i, source, a, Action::get)) continue;
      for (const auto& d : g.data_at(source)) {
        if (i.dlm_enforced() && readers(d).count(a) == 0) continue;
        IGraph next = g;
        next.loc_state[l].data.insert(d);
        out.push_back({{Action::get, a, l, source, d, {}}, i.with_graph(std::move(next))});
      }
    }
  }

  for (const auto& [a, l] : actors) {
    for (const auto& target : g.locations) {
      if (g.edges.count({l, target}) == 0 || !enables(i, target, a, Action::move)) continue;
      IGraph next = g;
      next.placement[l].erase(a);
      next.placement[target].insert(a);
      out.push_back({{Action::move, a, l, target, std::nullopt, {}}, i.with_graph(std::move(next))});
    }
  }

  for (const auto& [a, l] : actors) {
    if (!enables(i, l, a, Action::put)) continue;
    std::set<PutTemplate> templates;
    for (const auto& t : i.rules().put_data)
      if (t.actor == a) templates.insert(t);
    for (const auto& t : templates) {
      LabelledDatum d{DlmLabel{a, t.readers}, t.payload};
      IGraph next = g;
      next.loc_state[l].data.insert(d);
      out.push_back({{Action::put, a, l, l, d, {}}, i.with_graph(std::move(next))});
    }
  }

  const auto transform_names = i.transforms().names();
  for (const auto& [a, l] : actors) {
    if (!enables(i, l, a, Action::eval)) continue;
    for (const auto& d : g.data_at(l)) {
      if (!has_access(g, l, a, d)) continue;
      for (const auto& f : transform_names) {
        IGraph next = g;
        auto& data = next.loc_state[l].data;
        data.erase(d);
        data.insert(apply_label_fun(i.transforms(), f, d));
        out.push_back({{Action::eval, a, l, l, d, f}, i.with_graph(std::move(next))});
      }
    }
  }
  return out;
}

ExploredInfrastructure explore(const Infrastructure& seed, std::size_t bound) {
  return build_system<Infrastructure, InfrastructureHash>(
      std::vector<Infrastructure>{seed},
      [](const Infrastructure& s) {
        std::vector<Infrastructure> next;
        for (auto& t : step(s)) next.push_back(std::move(t.next));
        return next;
      },
      bound);
}

StateSet select(const ExploredInfrastructure& explored, const std::function<bool(const Infrastructure&)>& pred) {
  StateSet out(explored.states.size());
  for (std::uint32_t id = 0; id < explored.states.size(); ++id)
    if (pred(explored.states[id])) out.insert(StateId{id});
  return out;
}

// --- healthcare scenario ------------------------------------------------------

const std::set<Identity>& gdpr_actors() {
  static const std::set<Identity> actors{"Patient", "Doctor"};
  return actors;
}

const std::set<Location>& gdpr_locations() {
  static const std::set<Location> locations{"home", "sphone", "cloud", "hospital"};
  return locations;
}

namespace {

IGraph ex_graph() {
  IGraph g;
  g.locations = gdpr_locations();
  g.edges = {{"home", "cloud"}, {"sphone", "cloud"}, {"cloud", "hospital"}};
  g.placement = {{"home", {"Patient"}}, {"hospital", {"Doctor"}}};
  g.credentials = {{"Patient", Credentials{{"PIN"}, {}}}, {"Doctor", Credentials{{"skey"}, {}}}, {"Eve", Credentials{}}};
  g.loc_state = {{"cloud", LocationState{"free", {LabelledDatum{DlmLabel{"Patient", {"Doctor"}}, std::int64_t{42}}}}}};
  return g;
}

std::shared_ptr<const Rules> gdpr_rules(bool dlm_enforced) {
  const std::set<Action> all{Action::put, Action::get, Action::move, Action::eval};
  auto rules = std::make_shared<Rules>();
  rules->delta = {
      {"home", {PolicyClause{Condition::always(), all}}},
      {"sphone", {PolicyClause{Condition::has_credential("PIN"), all}}},
      {"cloud", {PolicyClause{Condition::always(), all}}},
      {"hospital", {PolicyClause{Condition::exists_at_with_credential("hospital", "skey"), all}}},
  };
  rules->dlm_enforced = dlm_enforced;
  rules->transforms = {"negate"};
  return rules;
}

}  // namespace

Infrastructure gdpr_scenario(bool dlm_enforced) { return Infrastructure(ex_graph(), gdpr_rules(dlm_enforced)); }

Infrastructure gdpr_eve_scenario(bool dlm_enforced) {
  IGraph g = ex_graph();
  g.placement["sphone"].insert("Eve");
  return Infrastructure(std::move(g), gdpr_rules(dlm_enforced));
}

bool global_policy(const Infrastructure& i, const Identity& a) {
  return gdpr_actors().count(a) != 0 || !enables(i, "cloud", a, Action::get);
}

bool ownership_preserved(const Infrastructure& i, const Identity& owner_id, const std::set<Payload>& lineage) {
  for (const auto& [l, st] : i.graph().loc_state)
    for (const auto& d : st.data)
      if (lineage.count(d.payload) != 0 && owner(d) != owner_id) return false;
  return true;
}

}  // namespace atcalc::infra
