#include "atcalc/scenario_io.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace atcalc::io {

using nlohmann::json;

ScenarioError::ScenarioError(Kind kind, std::string subject, std::string path, std::size_t line, std::size_t column)
    : Error([&] {
        std::string msg = std::string(to_string(kind)) + ": " + subject;
        if (line != 0) msg += " at line " + std::to_string(line) + ", column " + std::to_string(column);
        if (!path.empty()) msg += " (at " + path + ")";
        return msg;
      }()),
      kind_(kind),
      subject_(std::move(subject)),
      path_(std::move(path)),
      line_(line),
      column_(column) {}

json ScenarioError::to_json() const {
  json j{{"kind", to_string(kind_)}, {"subject", subject_}, {"message", what()}};
  j["path"] = path_;
  if (line_ != 0) {
    j["line"] = line_;
    j["column"] = column_;
  }
  return j;
}

const char* to_string(ScenarioError::Kind kind) noexcept {
  switch (kind) {
    case ScenarioError::Kind::syntax: return "SyntaxError";
    case ScenarioError::Kind::unresolved_reference: return "UnresolvedReference";
    case ScenarioError::Kind::duplicate_name: return "DuplicateName";
    case ScenarioError::Kind::schema_violation: return "SchemaViolation";
  }
  return "?";
}

const char* to_string(Query::Kind kind) noexcept {
  switch (kind) {
    case Query::Kind::check_validity: return "check-validity";
    case Query::Kind::refine_check: return "refine-check";
    case Query::Kind::mc: return "mc";
    case Query::Kind::synth: return "synth";
    case Query::Kind::at_ef: return "at-ef";
    case Query::Kind::atv_ef: return "atv-ef";
  }
  return "?";
}

SetExpr SetExpr::reference(std::string name) {
  SetExpr e;
  e.kind = Kind::ref;
  e.name = std::move(name);
  return e;
}

namespace {

using Kind = ScenarioError::Kind;

constexpr int kMaxNesting = 200;

std::string child(const std::string& path, std::string_view key) {
  std::string out = path + '/';
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string child(const std::string& path, std::size_t index) { return path + '/' + std::to_string(index); }

[[noreturn]] void violation(const std::string& path, const std::string& what) {
  throw ScenarioError(Kind::schema_violation, what, path);
}

[[noreturn]] void unresolved(const std::string& path, const std::string& name) {
  throw ScenarioError(Kind::unresolved_reference, name, path);
}

[[noreturn]] void duplicate(const std::string& path, const std::string& name) {
  throw ScenarioError(Kind::duplicate_name, name, path);
}

// --- JSON helpers ---------------------------------------------------------------

const json& object(const json& j, const std::string& path) {
  if (!j.is_object()) violation(path, "expected an object");
  return j;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) violation(path, "expected an array");
  return j;
}

void allow_keys(const json& j, std::initializer_list<std::string_view> keys, const std::string& path) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) violation(child(path, key), "unexpected key '" + key + "'");
  }
}

const json& member(const json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) violation(path, std::string("missing key '") + key + "'");
  return *it;
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) violation(path, "expected a string");
  return j.get<std::string>();
}

std::string name(const json& j, const std::string& path) {
  std::string s = text(j, path);
  if (s.empty()) violation(path, "names must be nonempty");
  return s;
}

bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) violation(path, "expected a boolean");
  return j.get<bool>();
}

std::uint64_t unsigned_int(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  violation(path, "expected a non-negative integer");
}

infra::Payload payload(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) violation(path, "payload out of range");
    return static_cast<std::int64_t>(v);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  violation(path, "payload must be an integer or a string");
}

json payload_json(const infra::Payload& p) {
  if (const auto* n = std::get_if<std::int64_t>(&p)) return *n;
  return std::get<std::string>(p);
}

std::vector<std::string> names(const json& j, const std::string& path) {
  array(j, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(name(j[i], child(path, i)));
  return out;
}

std::set<std::string> unique_names(const json& j, const std::string& path) {
  std::set<std::string> out;
  const auto list = names(j, path);
  for (std::size_t i = 0; i < list.size(); ++i)
    if (!out.insert(list[i]).second) duplicate(child(path, i), list[i]);
  return out;
}

template <class Fn>
auto single_key(const json& j, const std::string& path, Fn&& fn) {
  object(j, path);
  if (j.size() != 1) violation(path, "expected exactly one key");
  const auto it = j.begin();
  return fn(it.key(), it.value(), child(path, it.key()));
}

// --- expressions ------------------------------------------------------------------

SetExpr parse_set(const json& j, const std::string& path);

std::vector<SetExpr> set_operands(const json& j, const std::string& path) {
  array(j, path);
  if (j.empty()) violation(path, "expected at least one operand");
  std::vector<SetExpr> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_set(j[i], child(path, i)));
  return out;
}

SetExpr parse_set(const json& j, const std::string& path) {
  if (j.is_string()) return SetExpr::reference(name(j, path));
  return single_key(j, path, [&](const std::string& key, const json& v, const std::string& at) {
    SetExpr e;
    if (key == "states") {
      e.kind = SetExpr::Kind::states;
      e.states = names(v, at);
    } else if (key == "ids") {
      e.kind = SetExpr::Kind::ids;
      array(v, at);
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto id = unsigned_int(v[i], child(at, i));
        if (id > std::numeric_limits<std::uint32_t>::max()) violation(child(at, i), "state id out of range");
        e.ids.push_back(static_cast<std::uint32_t>(id));
      }
    } else if (key == "initial" || key == "all") {
      if (!boolean(v, at)) violation(at, "expected true");
      e.kind = key == "initial" ? SetExpr::Kind::initial : SetExpr::Kind::all;
    } else if (key == "actor_at") {
      object(v, at);
      allow_keys(v, {"actor", "location"}, at);
      e.kind = SetExpr::Kind::actor_at;
      e.actor = name(member(v, "actor", at), child(at, "actor"));
      e.location = name(member(v, "location", at), child(at, "location"));
    } else if (key == "datum_at") {
      object(v, at);
      allow_keys(v, {"location", "payload", "owner"}, at);
      e.kind = SetExpr::Kind::datum_at;
      e.location = name(member(v, "location", at), child(at, "location"));
      e.payload = payload(member(v, "payload", at), child(at, "payload"));
      if (v.contains("owner")) e.owner = name(v["owner"], child(at, "owner"));
    } else if (key == "enables") {
      object(v, at);
      allow_keys(v, {"location", "actor", "action"}, at);
      e.kind = SetExpr::Kind::enables;
      e.location = name(member(v, "location", at), child(at, "location"));
      e.actor = name(member(v, "actor", at), child(at, "actor"));
      const auto action = text(member(v, "action", at), child(at, "action"));
      const auto parsed = infra::parse_action(action);
      if (!parsed) violation(child(at, "action"), "unknown action '" + action + "'");
      e.action = *parsed;
    } else if (key == "owner_is") {
      object(v, at);
      allow_keys(v, {"owner", "payloads"}, at);
      e.kind = SetExpr::Kind::owner_is;
      e.owner = name(member(v, "owner", at), child(at, "owner"));
      const auto& list = array(member(v, "payloads", at), child(at, "payloads"));
      for (std::size_t i = 0; i < list.size(); ++i) e.payloads.push_back(payload(list[i], child(child(at, "payloads"), i)));
    } else if (key == "not") {
      e.kind = SetExpr::Kind::negation;
      e.operands.push_back(parse_set(v, at));
    } else if (key == "and" || key == "or") {
      e.kind = key == "and" ? SetExpr::Kind::conjunction : SetExpr::Kind::disjunction;
      e.operands = set_operands(v, at);
    } else {
      violation(at, "unknown set expression '" + key + "'");
    }
    return e;
  });
}

GoalExpr parse_goal(const json& j, const std::string& path) {
  object(j, path);
  allow_keys(j, {"pre", "post"}, path);
  return GoalExpr{parse_set(member(j, "pre", path), child(path, "pre")),
                  parse_set(member(j, "post", path), child(path, "post"))};
}

TreeExpr parse_tree(const json& j, const std::string& path) {
  TreeExpr t;
  if (j.is_string()) {
    t.kind = TreeExpr::Kind::ref;
    t.name = name(j, path);
    return t;
  }
  object(j, path);
  if (j.contains("base")) {
    allow_keys(j, {"base"}, path);
    t.kind = TreeExpr::Kind::base;
    t.goal = parse_goal(j["base"], child(path, "base"));
    return t;
  }
  const bool is_and = j.contains("and");
  if (!is_and && !j.contains("or")) violation(path, "attack tree needs one of 'base', 'and', 'or'");
  const char* key = is_and ? "and" : "or";
  allow_keys(j, {key, "goal"}, path);
  t.kind = is_and ? TreeExpr::Kind::conjunction : TreeExpr::Kind::disjunction;
  const auto& list = array(j[key], child(path, key));
  for (std::size_t i = 0; i < list.size(); ++i) t.children.push_back(parse_tree(list[i], child(child(path, key), i)));
  t.goal = parse_goal(member(j, "goal", path), child(path, "goal"));
  return t;
}

const std::map<std::string, CtlFormula::Op>& formula_ops() {
  using Op = CtlFormula::Op;
  static const std::map<std::string, Op> ops{
      {"atom", Op::atom}, {"not", Op::negation}, {"and", Op::conjunction}, {"or", Op::disjunction},
      {"EX", Op::ex},     {"AX", Op::ax},        {"EF", Op::ef},          {"AF", Op::af},
      {"EG", Op::eg},     {"AG", Op::ag},        {"EU", Op::eu},
  };
  return ops;
}

FormulaExpr parse_formula(const json& j, const std::string& path) {
  FormulaExpr f;
  if (j.is_string()) {
    f.is_ref = true;
    f.name = name(j, path);
    return f;
  }
  return single_key(j, path, [&](const std::string& key, const json& v, const std::string& at) {
    using Op = CtlFormula::Op;
    const auto it = formula_ops().find(key);
    if (it == formula_ops().end()) violation(at, "unknown CTL operator '" + key + "'");
    f.op = it->second;
    switch (f.op) {
      case Op::atom: f.atom = parse_set(v, at); break;
      case Op::conjunction:
      case Op::disjunction:
      case Op::eu:
        array(v, at);
        if (v.size() != 2) violation(at, "'" + key + "' takes exactly two operands");
        f.operands.push_back(parse_formula(v[0], child(at, 0)));
        f.operands.push_back(parse_formula(v[1], child(at, 1)));
        break;
      default: f.operands.push_back(parse_formula(v, at)); break;
    }
    return f;
  });
}

std::optional<Query::Kind> query_kind(std::string_view s) {
  for (auto k : {Query::Kind::check_validity, Query::Kind::refine_check, Query::Kind::mc, Query::Kind::synth,
                 Query::Kind::at_ef, Query::Kind::atv_ef}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

Query parse_query(const json& j, const std::string& path) {
  object(j, path);
  Query q;
  const auto kind_text = text(member(j, "kind", path), child(path, "kind"));
  const auto kind = query_kind(kind_text);
  if (!kind) violation(child(path, "kind"), "unknown query kind '" + kind_text + "'");
  q.kind = *kind;
  auto depth = [&] {
    if (j.contains("depth")) q.depth = unsigned_int(j["depth"], child(path, "depth"));
  };
  switch (q.kind) {
    case Query::Kind::check_validity:
    case Query::Kind::at_ef:
      allow_keys(j, {"kind", "tree"}, path);
      q.tree = parse_tree(member(j, "tree", path), child(path, "tree"));
      break;
    case Query::Kind::atv_ef:
      allow_keys(j, {"kind", "tree", "depth"}, path);
      q.tree = parse_tree(member(j, "tree", path), child(path, "tree"));
      depth();
      break;
    case Query::Kind::refine_check:
      allow_keys(j, {"kind", "abstract", "concrete", "depth"}, path);
      q.abstract = parse_tree(member(j, "abstract", path), child(path, "abstract"));
      q.concrete = parse_tree(member(j, "concrete", path), child(path, "concrete"));
      depth();
      break;
    case Query::Kind::mc:
      allow_keys(j, {"kind", "formula"}, path);
      q.formula = parse_formula(member(j, "formula", path), child(path, "formula"));
      break;
    case Query::Kind::synth:
      allow_keys(j, {"kind", "init", "goal"}, path);
      q.init = parse_set(member(j, "init", path), child(path, "init"));
      q.goal = parse_set(member(j, "goal", path), child(path, "goal"));
      break;
  }
  return q;
}

// --- declarations ---------------------------------------------------------------

RawSystemDecl parse_system(const json& j, const std::string& path) {
  object(j, path);
  allow_keys(j, {"states", "edges", "initial"}, path);
  RawSystemDecl sys;
  sys.states = names(member(j, "states", path), child(path, "states"));
  std::set<std::string> known;
  for (std::size_t i = 0; i < sys.states.size(); ++i)
    if (!known.insert(sys.states[i]).second) duplicate(child(child(path, "states"), i), sys.states[i]);

  if (j.contains("edges")) {
    const std::string at = child(path, "edges");
    const auto& list = array(j["edges"], at);
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string edge_path = child(at, i);
      if (!list[i].is_array() || list[i].size() != 2) violation(edge_path, "edge must be a [from, to] pair");
      std::pair<std::string, std::string> edge{name(list[i][0], child(edge_path, 0)), name(list[i][1], child(edge_path, 1))};
      if (!known.count(edge.first)) unresolved(child(edge_path, 0), edge.first);
      if (!known.count(edge.second)) unresolved(child(edge_path, 1), edge.second);
      if (!seen.insert(edge).second) violation(edge_path, "duplicate edge");
      sys.edges.push_back(std::move(edge));
    }
  }
  const std::string init_path = child(path, "initial");
  sys.initial = names(member(j, "initial", path), init_path);
  std::set<std::string> init_seen;
  for (std::size_t i = 0; i < sys.initial.size(); ++i) {
    if (!known.count(sys.initial[i])) unresolved(child(init_path, i), sys.initial[i]);
    if (!init_seen.insert(sys.initial[i]).second) duplicate(child(init_path, i), sys.initial[i]);
  }
  return sys;
}

infra::Condition parse_condition(const json& j, const std::string& path) {
  using infra::Condition;
  if (j.is_string()) {
    if (j.get<std::string>() != "true") violation(path, "unknown condition '" + j.get<std::string>() + "'");
    return Condition::always();
  }
  return single_key(j, path, [&](const std::string& key, const json& v, const std::string& at) {
    if (key == "has_credential") return Condition::has_credential(name(v, at));
    if (key == "at") return Condition::at(name(v, at));
    if (key == "exists_at_with_credential") {
      object(v, at);
      allow_keys(v, {"location", "credential"}, at);
      return Condition::exists_at_with_credential(name(member(v, "location", at), child(at, "location")),
                                                  name(member(v, "credential", at), child(at, "credential")));
    }
    if (key == "not") return Condition::negation(parse_condition(v, at));
    if (key == "and" || key == "or") {
      array(v, at);
      if (v.size() != 2) violation(at, "'" + key + "' takes exactly two conditions");
      auto a = parse_condition(v[0], child(at, 0));
      auto b = parse_condition(v[1], child(at, 1));
      return key == "and" ? Condition::all_of(std::move(a), std::move(b)) : Condition::any_of(std::move(a), std::move(b));
    }
    violation(at, "unknown condition '" + key + "'");
  });
}

infra::LabelledDatum parse_datum(const json& j, const std::string& path) {
  object(j, path);
  allow_keys(j, {"owner", "readers", "payload"}, path);
  infra::LabelledDatum d;
  d.label.owner = name(member(j, "owner", path), child(path, "owner"));
  if (j.contains("readers")) d.label.readers = unique_names(j["readers"], child(path, "readers"));
  d.payload = payload(member(j, "payload", path), child(path, "payload"));
  return d;
}

InfrastructureDecl parse_infrastructure(const json& j, const std::string& path) {
  object(j, path);
  allow_keys(j, {"locations", "edges", "identities", "placement", "data", "policies", "dlm", "transforms", "put"}, path);
  InfrastructureDecl decl;
  infra::IGraph& g = decl.graph;
  infra::Rules& rules = decl.rules;

  g.locations = unique_names(member(j, "locations", path), child(path, "locations"));
  auto require_location = [&](const std::string& l, const std::string& at) {
    if (!g.locations.count(l)) unresolved(at, l);
  };

  if (j.contains("identities")) {
    const std::string at = child(path, "identities");
    for (const auto& [id, creds] : object(j["identities"], at).items()) {
      const std::string id_path = child(at, id);
      if (id.empty()) violation(id_path, "names must be nonempty");
      object(creds, id_path);
      allow_keys(creds, {"credentials", "roles"}, id_path);
      infra::Credentials c;
      if (creds.contains("credentials")) c.credentials = unique_names(creds["credentials"], child(id_path, "credentials"));
      if (creds.contains("roles")) c.roles = unique_names(creds["roles"], child(id_path, "roles"));
      g.credentials.emplace(id, std::move(c));
    }
  }
  auto require_identity = [&](const std::string& id, const std::string& at) {
    if (!g.credentials.count(id)) unresolved(at, id);
  };

  if (j.contains("edges")) {
    const std::string at = child(path, "edges");
    const auto& list = array(j["edges"], at);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string edge_path = child(at, i);
      if (!list[i].is_array() || list[i].size() != 2) violation(edge_path, "edge must be a [from, to] pair");
      const auto from = name(list[i][0], child(edge_path, 0));
      const auto to = name(list[i][1], child(edge_path, 1));
      require_location(from, child(edge_path, 0));
      require_location(to, child(edge_path, 1));
      if (!g.edges.emplace(from, to).second) violation(edge_path, "duplicate edge");
    }
  }

  if (j.contains("placement")) {
    const std::string at = child(path, "placement");
    std::set<std::string> placed_somewhere;
    for (const auto& [l, ids] : object(j["placement"], at).items()) {
      require_location(l, child(at, l));
      auto placed = unique_names(ids, child(at, l));
      std::size_t i = 0;
      for (const auto& id : placed) {
        require_identity(id, child(child(at, l), i));
        if (!placed_somewhere.insert(id).second) violation(child(child(at, l), i), "identity '" + id + "' placed twice");
        ++i;
      }
      g.placement.emplace(l, std::move(placed));
    }
  }

  if (j.contains("data")) {
    const std::string at = child(path, "data");
    for (const auto& [l, st] : object(j["data"], at).items()) {
      const std::string loc_path = child(at, l);
      require_location(l, loc_path);
      object(st, loc_path);
      allow_keys(st, {"component", "items"}, loc_path);
      infra::LocationState state;
      if (st.contains("component")) state.component = text(st["component"], child(loc_path, "component"));
      if (st.contains("items")) {
        const std::string items_path = child(loc_path, "items");
        const auto& items = array(st["items"], items_path);
        for (std::size_t i = 0; i < items.size(); ++i) {
          auto d = parse_datum(items[i], child(items_path, i));
          require_identity(d.label.owner, child(child(items_path, i), "owner"));
          for (const auto& r : d.label.readers) require_identity(r, child(child(items_path, i), "readers"));
          if (!state.data.insert(std::move(d)).second) violation(child(items_path, i), "duplicate datum");
        }
      }
      g.loc_state.emplace(l, std::move(state));
    }
  }

  if (j.contains("policies")) {
    const std::string at = child(path, "policies");
    for (const auto& [l, clauses] : object(j["policies"], at).items()) {
      const std::string loc_path = child(at, l);
      require_location(l, loc_path);
      array(clauses, loc_path);
      std::vector<infra::PolicyClause> parsed;
      for (std::size_t i = 0; i < clauses.size(); ++i) {
        const std::string clause_path = child(loc_path, i);
        object(clauses[i], clause_path);
        allow_keys(clauses[i], {"condition", "actions"}, clause_path);
        infra::PolicyClause clause{parse_condition(member(clauses[i], "condition", clause_path), child(clause_path, "condition")), {}};
        std::function<void(const infra::Condition&, const std::string&)> check_locations =
            [&](const infra::Condition& c, const std::string& cp) {
              if (!c.location().empty()) require_location(c.location(), cp);
              for (const auto& op : c.operands()) check_locations(op, cp);
            };
        check_locations(clause.condition, child(clause_path, "condition"));
        const std::string actions_path = child(clause_path, "actions");
        const auto action_names = names(member(clauses[i], "actions", clause_path), actions_path);
        for (std::size_t k = 0; k < action_names.size(); ++k) {
          const auto a = infra::parse_action(action_names[k]);
          if (!a) violation(child(actions_path, k), "unknown action '" + action_names[k] + "'");
          if (!clause.actions.insert(*a).second) duplicate(child(actions_path, k), action_names[k]);
        }
        parsed.push_back(std::move(clause));
      }
      rules.delta.emplace(l, std::move(parsed));
    }
  }

  if (j.contains("dlm")) rules.dlm_enforced = boolean(j["dlm"], child(path, "dlm"));

  if (j.contains("transforms")) {
    const std::string at = child(path, "transforms");
    rules.transforms = names(j["transforms"], at);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < rules.transforms.size(); ++i) {
      const auto& t = rules.transforms[i];
      if (!seen.insert(t).second) duplicate(child(at, i), t);
      if (!infra::TransformRegistry::builtin().contains(t)) unresolved(child(at, i), t);
    }
  }

  if (j.contains("put")) {
    const std::string at = child(path, "put");
    const auto& list = array(j["put"], at);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string item = child(at, i);
      object(list[i], item);
      allow_keys(list[i], {"actor", "readers", "payload"}, item);
      infra::PutTemplate t;
      t.actor = name(member(list[i], "actor", item), child(item, "actor"));
      require_identity(t.actor, child(item, "actor"));
      if (list[i].contains("readers")) t.readers = unique_names(list[i]["readers"], child(item, "readers"));
      t.payload = payload(member(list[i], "payload", item), child(item, "payload"));
      rules.put_data.push_back(std::move(t));
    }
  }
  return decl;
}

// --- reference validation ---------------------------------------------------------

class Validator {
 public:
  explicit Validator(const ScenarioDoc& doc) : doc_(doc) {
    if (doc.system) raw_states_.insert(doc.system->states.begin(), doc.system->states.end());
  }

  void run() {
    for (const auto& [n, e] : doc_.sets) set(e, child("/sets", n));
    for (const auto& [n, t] : doc_.trees) tree(t, child("/trees", n));
    for (const auto& [n, f] : doc_.formulas) formula(f, child("/formulas", n));
    for (const auto& [n, q] : doc_.queries) query(q, child("/queries", n));
    acyclic<SetExpr>(doc_.sets, "/sets", [](const SetExpr& e, auto&& visit) { walk_set_refs(e, visit); });
    acyclic<TreeExpr>(doc_.trees, "/trees", [](const TreeExpr& t, auto&& visit) { walk_tree_refs(t, visit); });
    acyclic<FormulaExpr>(doc_.formulas, "/formulas",
                         [](const FormulaExpr& f, auto&& visit) { walk_formula_refs(f, visit); });
  }

 private:
  void need_infrastructure(const std::string& path, const char* what) const {
    if (!doc_.infrastructure) violation(path, std::string(what) + " requires an infrastructure document");
  }
  void location(const std::string& l, const std::string& path) const {
    if (!doc_.infrastructure->graph.locations.count(l)) unresolved(path, l);
  }
  void identity(const std::string& id, const std::string& path) const {
    if (!doc_.infrastructure->graph.credentials.count(id)) unresolved(path, id);
  }

  void set(const SetExpr& e, const std::string& path) const {
    using K = SetExpr::Kind;
    switch (e.kind) {
      case K::ref:
        if (!doc_.sets.count(e.name)) unresolved(path, e.name);
        break;
      case K::states:
        if (!doc_.system) violation(path, "'states' requires a raw system document");
        for (std::size_t i = 0; i < e.states.size(); ++i)
          if (!raw_states_.count(e.states[i])) unresolved(child(child(path, "states"), i), e.states[i]);
        break;
      case K::ids:
      case K::initial:
      case K::all: break;
      case K::actor_at:
        need_infrastructure(path, "actor_at");
        identity(e.actor, child(child(path, "actor_at"), "actor"));
        location(e.location, child(child(path, "actor_at"), "location"));
        break;
      case K::datum_at:
        need_infrastructure(path, "datum_at");
        location(e.location, child(child(path, "datum_at"), "location"));
        if (e.owner) identity(*e.owner, child(child(path, "datum_at"), "owner"));
        break;
      case K::enables:
        need_infrastructure(path, "enables");
        identity(e.actor, child(child(path, "enables"), "actor"));
        location(e.location, child(child(path, "enables"), "location"));
        break;
      case K::owner_is:
        need_infrastructure(path, "owner_is");
        identity(*e.owner, child(child(path, "owner_is"), "owner"));
        break;
      case K::negation: set(e.operands[0], child(path, "not")); break;
      case K::conjunction:
      case K::disjunction: {
        const std::string at = child(path, e.kind == K::conjunction ? "and" : "or");
        for (std::size_t i = 0; i < e.operands.size(); ++i) set(e.operands[i], child(at, i));
        break;
      }
    }
  }

  void tree(const TreeExpr& t, const std::string& path) const {
    switch (t.kind) {
      case TreeExpr::Kind::ref:
        if (!doc_.trees.count(t.name)) unresolved(path, t.name);
        return;
      case TreeExpr::Kind::base:
        set(t.goal.pre, child(child(path, "base"), "pre"));
        set(t.goal.post, child(child(path, "base"), "post"));
        return;
      case TreeExpr::Kind::conjunction:
      case TreeExpr::Kind::disjunction: {
        const std::string at = child(path, t.kind == TreeExpr::Kind::conjunction ? "and" : "or");
        for (std::size_t i = 0; i < t.children.size(); ++i) tree(t.children[i], child(at, i));
        set(t.goal.pre, child(child(path, "goal"), "pre"));
        set(t.goal.post, child(child(path, "goal"), "post"));
        return;
      }
    }
  }

  void formula(const FormulaExpr& f, const std::string& path) const {
    if (f.is_ref) {
      if (!doc_.formulas.count(f.name)) unresolved(path, f.name);
      return;
    }
    const std::string at = child(path, to_string(f.op));
    if (f.op == CtlFormula::Op::atom) {
      set(f.atom, at);
      return;
    }
    if (f.operands.size() == 1) {
      formula(f.operands[0], at);
      return;
    }
    for (std::size_t i = 0; i < f.operands.size(); ++i) formula(f.operands[i], child(at, i));
  }

  void query(const Query& q, const std::string& path) const {
    if (q.tree) tree(*q.tree, child(path, "tree"));
    if (q.abstract) tree(*q.abstract, child(path, "abstract"));
    if (q.concrete) tree(*q.concrete, child(path, "concrete"));
    if (q.formula) formula(*q.formula, child(path, "formula"));
    if (q.init) set(*q.init, child(path, "init"));
    if (q.goal) set(*q.goal, child(path, "goal"));
  }

  template <class Visit>
  static void walk_set_refs(const SetExpr& e, Visit&& visit) {
    if (e.kind == SetExpr::Kind::ref) visit(e.name);
    for (const auto& op : e.operands) walk_set_refs(op, visit);
  }
  template <class Visit>
  static void walk_tree_refs(const TreeExpr& t, Visit&& visit) {
    if (t.kind == TreeExpr::Kind::ref) visit(t.name);
    for (const auto& c : t.children) walk_tree_refs(c, visit);
  }
  template <class Visit>
  static void walk_formula_refs(const FormulaExpr& f, Visit&& visit) {
    if (f.is_ref) visit(f.name);
    for (const auto& op : f.operands) walk_formula_refs(op, visit);
  }

  template <class Expr, class Walk>
  static void acyclic(const std::map<std::string, Expr>& defs, const std::string& section, Walk walk) {
    enum class Mark { fresh, active, done };
    std::map<std::string, Mark> mark;
    std::function<void(const std::string&)> dfs = [&](const std::string& n) {
      auto& m = mark[n];
      if (m == Mark::done) return;
      if (m == Mark::active) violation(child(section, n), "cyclic reference through '" + n + "'");
      m = Mark::active;
      walk(defs.at(n), [&](const std::string& target) { dfs(target); });
      mark[n] = Mark::done;
    };
    for (const auto& [n, e] : defs) dfs(n);
  }

  const ScenarioDoc& doc_;
  std::set<std::string> raw_states_;
};

// --- serialization ---------------------------------------------------------------

json strings_json(const std::set<std::string>& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

json condition_json(const infra::Condition& c) {
  using K = infra::Condition::Kind;
  switch (c.kind()) {
    case K::always: return "true";
    case K::has_credential: return json{{"has_credential", c.credential()}};
    case K::at_location: return json{{"at", c.location()}};
    case K::exists_at_with_credential:
      return json{{"exists_at_with_credential", {{"location", c.location()}, {"credential", c.credential()}}}};
    case K::all_of: return json{{"and", {condition_json(c.operands()[0]), condition_json(c.operands()[1])}}};
    case K::any_of: return json{{"or", {condition_json(c.operands()[0]), condition_json(c.operands()[1])}}};
    case K::negation: return json{{"not", condition_json(c.operands()[0])}};
  }
  return nullptr;
}

json datum_json(const infra::LabelledDatum& d) {
  return json{{"owner", d.label.owner}, {"readers", strings_json(d.label.readers)}, {"payload", payload_json(d.payload)}};
}

json infrastructure_json(const InfrastructureDecl& decl) {
  const auto& g = decl.graph;
  json j;
  j["locations"] = strings_json(g.locations);
  j["edges"] = json::array();
  for (const auto& [from, to] : g.edges) j["edges"].push_back({from, to});
  j["identities"] = json::object();
  for (const auto& [id, c] : g.credentials)
    j["identities"][id] = {{"credentials", strings_json(c.credentials)}, {"roles", strings_json(c.roles)}};
  j["placement"] = json::object();
  for (const auto& [l, ids] : g.placement) j["placement"][l] = strings_json(ids);
  j["data"] = json::object();
  for (const auto& [l, st] : g.loc_state) {
    json items = json::array();
    for (const auto& d : st.data) items.push_back(datum_json(d));
    j["data"][l] = {{"component", st.component}, {"items", items}};
  }
  j["policies"] = json::object();
  for (const auto& [l, clauses] : decl.rules.delta) {
    json list = json::array();
    for (const auto& clause : clauses) {
      json actions = json::array();
      for (auto a : clause.actions) actions.push_back(infra::to_string(a));
      list.push_back({{"condition", condition_json(clause.condition)}, {"actions", actions}});
    }
    j["policies"][l] = list;
  }
  j["dlm"] = decl.rules.dlm_enforced;
  j["transforms"] = decl.rules.transforms;
  j["put"] = json::array();
  for (const auto& t : decl.rules.put_data)
    j["put"].push_back({{"actor", t.actor}, {"readers", strings_json(t.readers)}, {"payload", payload_json(t.payload)}});
  return j;
}

json goal_json(const GoalExpr& g) { return json{{"pre", to_json(g.pre)}, {"post", to_json(g.post)}}; }

json query_json(const Query& q) {
  json j{{"kind", to_string(q.kind)}};
  if (q.tree) j["tree"] = to_json(*q.tree);
  if (q.abstract) j["abstract"] = to_json(*q.abstract);
  if (q.concrete) j["concrete"] = to_json(*q.concrete);
  if (q.formula) j["formula"] = to_json(*q.formula);
  if (q.init) j["init"] = to_json(*q.init);
  if (q.goal) j["goal"] = to_json(*q.goal);
  if (q.depth) j["depth"] = *q.depth;
  return j;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

json to_json(const SetExpr& s) {
  using K = SetExpr::Kind;
  switch (s.kind) {
    case K::ref: return s.name;
    case K::states: return json{{"states", s.states}};
    case K::ids: return json{{"ids", s.ids}};
    case K::initial: return json{{"initial", true}};
    case K::all: return json{{"all", true}};
    case K::actor_at: return json{{"actor_at", {{"actor", s.actor}, {"location", s.location}}}};
    case K::datum_at: {
      json body{{"location", s.location}, {"payload", payload_json(*s.payload)}};
      if (s.owner) body["owner"] = *s.owner;
      return json{{"datum_at", body}};
    }
    case K::enables:
      return json{{"enables", {{"location", s.location}, {"actor", s.actor}, {"action", infra::to_string(s.action)}}}};
    case K::owner_is: {
      json payloads = json::array();
      for (const auto& p : s.payloads) payloads.push_back(payload_json(p));
      return json{{"owner_is", {{"owner", *s.owner}, {"payloads", payloads}}}};
    }
    case K::negation: return json{{"not", to_json(s.operands[0])}};
    case K::conjunction:
    case K::disjunction: {
      json list = json::array();
      for (const auto& op : s.operands) list.push_back(to_json(op));
      return json{{s.kind == K::conjunction ? "and" : "or", list}};
    }
  }
  return nullptr;
}

json to_json(const TreeExpr& t) {
  switch (t.kind) {
    case TreeExpr::Kind::ref: return t.name;
    case TreeExpr::Kind::base: return json{{"base", goal_json(t.goal)}};
    case TreeExpr::Kind::conjunction:
    case TreeExpr::Kind::disjunction: {
      json list = json::array();
      for (const auto& c : t.children) list.push_back(to_json(c));
      return json{{t.kind == TreeExpr::Kind::conjunction ? "and" : "or", list}, {"goal", goal_json(t.goal)}};
    }
  }
  return nullptr;
}

json to_json(const FormulaExpr& f) {
  if (f.is_ref) return f.name;
  const std::string op = to_string(f.op);
  if (f.op == CtlFormula::Op::atom) return json{{op, to_json(f.atom)}};
  if (f.operands.size() == 1) return json{{op, to_json(f.operands[0])}};
  return json{{op, {to_json(f.operands[0]), to_json(f.operands[1])}}};
}

json to_json(const ScenarioDoc& doc) {
  json j = json::object();
  if (doc.description) j["description"] = *doc.description;
  if (doc.system) {
    json edges = json::array();
    for (const auto& [from, to] : doc.system->edges) edges.push_back({from, to});
    j["system"] = {{"states", doc.system->states}, {"edges", edges}, {"initial", doc.system->initial}};
  }
  if (doc.infrastructure) j["infrastructure"] = infrastructure_json(*doc.infrastructure);
  j["sets"] = json::object();
  for (const auto& [n, e] : doc.sets) j["sets"][n] = to_json(e);
  j["trees"] = json::object();
  for (const auto& [n, t] : doc.trees) j["trees"][n] = to_json(t);
  j["formulas"] = json::object();
  for (const auto& [n, f] : doc.formulas) j["formulas"][n] = to_json(f);
  j["queries"] = json::object();
  for (const auto& [n, q] : doc.queries) j["queries"][n] = query_json(q);
  return j;
}

std::string serialize(const json& value) { return value.dump(2, ' ', false, json::error_handler_t::replace) + "\n"; }

std::string serialize(const ScenarioDoc& doc) { return serialize(to_json(doc)); }

ScenarioDoc parse(std::string_view input) {
  // Track object keys per nesting level: the DOM silently keeps the last
  // duplicate, so they have to be caught during parsing.
  std::vector<std::set<std::string>> keys;
  std::vector<std::string> path_stack;
  const json::parser_callback_t callback = [&](int depth, json::parse_event_t event, json& parsed) {
    if (depth > kMaxNesting) violation("", "document nested deeper than " + std::to_string(kMaxNesting) + " levels");
    switch (event) {
      case json::parse_event_t::object_start: keys.emplace_back(); break;
      case json::parse_event_t::object_end:
        if (!keys.empty()) keys.pop_back();
        break;
      case json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!keys.empty() && !keys.back().insert(key).second) throw ScenarioError(Kind::duplicate_name, key, "");
        break;
      }
      default: break;
    }
    return true;
  };

  json root;
  try {
    root = json::parse(input.begin(), input.end(), callback);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(input, e.byte);
    std::string message = e.what();
    if (const auto pos = message.find("parse error"); pos != std::string::npos) message = message.substr(pos);
    throw ScenarioError(Kind::syntax, message, "", line, column);
  } catch (const json::out_of_range& e) {
    // Number literals too large for a double; the parser reports no position.
    std::string message = e.what();
    if (const auto pos = message.find("number overflow"); pos != std::string::npos) message = message.substr(pos);
    throw ScenarioError(Kind::syntax, message, "");
  }

  object(root, "");
  allow_keys(root, {"description", "system", "infrastructure", "sets", "trees", "formulas", "queries"}, "");
  ScenarioDoc doc;
  if (root.contains("description")) doc.description = text(root["description"], "/description");
  if (root.contains("system") == root.contains("infrastructure"))
    violation("", "document needs exactly one of 'system' and 'infrastructure'");
  if (root.contains("system")) doc.system = parse_system(root["system"], "/system");
  if (root.contains("infrastructure")) doc.infrastructure = parse_infrastructure(root["infrastructure"], "/infrastructure");

  auto section = [&](const char* key, auto& target, auto parse_one) {
    if (!root.contains(key)) return;
    const std::string at = child("", key);
    for (const auto& [n, value] : object(root[key], at).items()) {
      if (n.empty()) violation(child(at, n), "names must be nonempty");
      target.emplace(n, parse_one(value, child(at, n)));
    }
  };
  section("sets", doc.sets, parse_set);
  section("trees", doc.trees, parse_tree);
  section("formulas", doc.formulas, parse_formula);
  section("queries", doc.queries, parse_query);

  Validator(doc).run();
  return doc;
}

// --- Model ------------------------------------------------------------------------

namespace {

template <class Fn>
void walk_sets(const SetExpr& e, const std::string& path, Fn& fn) {
  fn(e, path);
  for (std::size_t i = 0; i < e.operands.size(); ++i) walk_sets(e.operands[i], child(path, i), fn);
}

template <class Fn>
void walk_sets(const TreeExpr& t, const std::string& path, Fn& fn) {
  if (t.kind == TreeExpr::Kind::ref) return;
  walk_sets(t.goal.pre, child(path, "pre"), fn);
  walk_sets(t.goal.post, child(path, "post"), fn);
  for (std::size_t i = 0; i < t.children.size(); ++i) walk_sets(t.children[i], child(path, i), fn);
}

template <class Fn>
void walk_sets(const FormulaExpr& f, const std::string& path, Fn& fn) {
  if (f.is_ref) return;
  if (f.op == CtlFormula::Op::atom) walk_sets(f.atom, path, fn);
  for (std::size_t i = 0; i < f.operands.size(); ++i) walk_sets(f.operands[i], child(path, i), fn);
}

template <class Fn>
void walk_sets(const ScenarioDoc& doc, Fn fn) {
  for (const auto& [n, e] : doc.sets) walk_sets(e, child("/sets", n), fn);
  for (const auto& [n, t] : doc.trees) walk_sets(t, child("/trees", n), fn);
  for (const auto& [n, f] : doc.formulas) walk_sets(f, child("/formulas", n), fn);
  for (const auto& [n, q] : doc.queries) {
    const std::string at = child("/queries", n);
    if (q.tree) walk_sets(*q.tree, child(at, "tree"), fn);
    if (q.abstract) walk_sets(*q.abstract, child(at, "abstract"), fn);
    if (q.concrete) walk_sets(*q.concrete, child(at, "concrete"), fn);
    if (q.formula) walk_sets(*q.formula, child(at, "formula"), fn);
    if (q.init) walk_sets(*q.init, child(at, "init"), fn);
    if (q.goal) walk_sets(*q.goal, child(at, "goal"), fn);
  }
}

}  // namespace

Model Model::load(ScenarioDoc doc, std::size_t bound) {
  Model m;
  m.doc_ = std::move(doc);
  if (m.doc_.system) {
    const auto& sys = *m.doc_.system;
    if (sys.states.size() > bound) throw BoundExceeded(bound);
    for (std::size_t i = 0; i < sys.states.size(); ++i)
      m.state_index_.emplace(sys.states[i], StateId{static_cast<std::uint32_t>(i)});
    std::vector<std::vector<StateId>> successors(sys.states.size());
    for (const auto& [from, to] : sys.edges) successors[m.state_index_.at(from).value].push_back(m.state_index_.at(to));
    m.raw_ = std::make_unique<TransitionSystem>(successors);
    StateSet init(sys.states.size());
    for (const auto& s : sys.initial) init.insert(m.state_index_.at(s));
    m.kripke_ = std::make_unique<KripkeStructure>(reach_close(*m.raw_, init));
  } else {
    const auto& decl = *m.doc_.infrastructure;
    const infra::Infrastructure seed(decl.graph, std::make_shared<const infra::Rules>(decl.rules));
    m.explored_ = std::make_unique<infra::ExploredInfrastructure>(infra::explore(seed, bound));
    m.kripke_ = std::make_unique<KripkeStructure>(reach_close(m.explored_->system, m.explored_->seeds()));
  }

  const std::size_t n = m.state_count();
  walk_sets(m.doc_, [&](const SetExpr& e, const std::string& path) {
    if (e.kind != SetExpr::Kind::ids) return;
    for (std::size_t i = 0; i < e.ids.size(); ++i)
      if (e.ids[i] >= n) unresolved(child(path, i), "#" + std::to_string(e.ids[i]));
  });
  return m;
}

const TransitionSystem& Model::system() const noexcept { return explored_ ? explored_->system : *raw_; }

std::size_t Model::exploration_depth() const noexcept { return explored_ ? explored_->depth : 0; }

std::string Model::state_name(StateId s) const {
  if (doc_.system) return doc_.system->states.at(s.value);
  return "#" + std::to_string(s.value);
}

StateSet Model::named_set(const std::string& name) const {
  if (auto it = set_cache_.find(name); it != set_cache_.end()) return it->second;
  const auto def = doc_.sets.find(name);
  if (def == doc_.sets.end()) unresolved("/sets", name);
  StateSet s = set(def->second);
  set_cache_.emplace(name, s);
  return s;
}

StateSet Model::set(const SetExpr& e) const {
  using K = SetExpr::Kind;
  const std::size_t n = state_count();
  auto select = [&](auto pred) { return infra::select(*explored_, pred); };
  switch (e.kind) {
    case K::ref: return named_set(e.name);
    case K::states: {
      StateSet s(n);
      for (const auto& name : e.states) s.insert(state_index_.at(name));
      return s;
    }
    case K::ids: {
      StateSet s(n);
      for (auto id : e.ids) {
        if (id >= n) unresolved("", "#" + std::to_string(id));
        s.insert(StateId{id});
      }
      return s;
    }
    case K::initial: return kripke_->init();
    case K::all: return StateSet::full(n);
    case K::actor_at:
      return select([&](const infra::Infrastructure& i) { return i.graph().at(e.actor, e.location); });
    case K::datum_at:
      return select([&](const infra::Infrastructure& i) {
        for (const auto& d : i.graph().data_at(e.location))
          if (d.payload == *e.payload && (!e.owner || infra::owner(d) == *e.owner)) return true;
        return false;
      });
    case K::enables:
      return select([&](const infra::Infrastructure& i) { return infra::enables(i, e.location, e.actor, e.action); });
    case K::owner_is: {
      const std::set<infra::Payload> lineage(e.payloads.begin(), e.payloads.end());
      return select([&](const infra::Infrastructure& i) { return infra::ownership_preserved(i, *e.owner, lineage); });
    }
    case K::negation: return set(e.operands[0]).complement();
    case K::conjunction: {
      StateSet s = set(e.operands[0]);
      for (std::size_t i = 1; i < e.operands.size(); ++i) s &= set(e.operands[i]);
      return s;
    }
    case K::disjunction: {
      StateSet s = set(e.operands[0]);
      for (std::size_t i = 1; i < e.operands.size(); ++i) s |= set(e.operands[i]);
      return s;
    }
  }
  return StateSet(n);
}

AttackTree Model::named_tree(const std::string& name) const {
  const auto def = doc_.trees.find(name);
  if (def == doc_.trees.end()) unresolved("/trees", name);
  return tree(def->second);
}

AttackTree Model::tree(const TreeExpr& e) const {
  if (e.kind == TreeExpr::Kind::ref) return named_tree(e.name);
  AttackGoal goal{set(e.goal.pre), set(e.goal.post)};
  if (e.kind == TreeExpr::Kind::base) return AttackTree::base(std::move(goal));
  std::vector<AttackTree> children;
  for (const auto& c : e.children) children.push_back(tree(c));
  return e.kind == TreeExpr::Kind::conjunction ? AttackTree::and_node(std::move(children), std::move(goal))
                                                : AttackTree::or_node(std::move(children), std::move(goal));
}

CtlFormula Model::named_formula(const std::string& name) const {
  const auto def = doc_.formulas.find(name);
  if (def == doc_.formulas.end()) unresolved("/formulas", name);
  return formula(def->second);
}

CtlFormula Model::formula(const FormulaExpr& e) const {
  using Op = CtlFormula::Op;
  if (e.is_ref) return named_formula(e.name);
  auto arg = [&](std::size_t i) { return formula(e.operands[i]); };
  switch (e.op) {
    case Op::atom: return CtlFormula::atom(set(e.atom));
    case Op::negation: return CtlFormula::negation(arg(0));
    case Op::conjunction: return CtlFormula::conjunction(arg(0), arg(1));
    case Op::disjunction: return CtlFormula::disjunction(arg(0), arg(1));
    case Op::ex: return CtlFormula::ex(arg(0));
    case Op::ax: return CtlFormula::ax(arg(0));
    case Op::ef: return CtlFormula::ef(arg(0));
    case Op::af: return CtlFormula::af(arg(0));
    case Op::eg: return CtlFormula::eg(arg(0));
    case Op::ag: return CtlFormula::ag(arg(0));
    case Op::eu: return CtlFormula::eu(arg(0), arg(1));
  }
  throw std::logic_error("unhandled CTL operator");
}

SetExpr Model::set_expr(const StateSet& s) const {
  SetExpr e;
  if (doc_.system) {
    e.kind = SetExpr::Kind::states;
    s.for_each([&](StateId id) { e.states.push_back(state_name(id)); });
  } else {
    e.kind = SetExpr::Kind::ids;
    s.for_each([&](StateId id) { e.ids.push_back(id.value); });
  }
  return e;
}

TreeExpr Model::tree_expr(const AttackTree& t) const {
  TreeExpr e;
  e.goal = GoalExpr{set_expr(t.goal().pre), set_expr(t.goal().post)};
  switch (t.kind()) {
    case AttackTree::Kind::base: e.kind = TreeExpr::Kind::base; break;
    case AttackTree::Kind::conjunction: e.kind = TreeExpr::Kind::conjunction; break;
    case AttackTree::Kind::disjunction: e.kind = TreeExpr::Kind::disjunction; break;
  }
  for (const auto& c : t.children()) e.children.push_back(tree_expr(c));
  return e;
}

json Model::set_json(const StateSet& s) const { return to_json(set_expr(s)); }

json Model::goal_json(const AttackGoal& g) const { return json{{"pre", set_json(g.pre)}, {"post", set_json(g.post)}}; }

json report_json(const AdequacyReport& report, const Model& model) {
  return json{
      {"tree", model.tree_json(report.tree)},
      {"goal", model.goal_json(report.goal)},
      {"kripke",
       {{"states", model.set_json(report.kripke.states())},
        {"init", model.set_json(report.kripke.init())},
        {"size", report.kripke.states().count()}}},
      {"tree_valid", report.tree_valid},
      {"ef_holds", report.ef_holds},
      {"consistent", report.consistent},
      {"antecedent_inconclusive", report.antecedent_inconclusive},
  };
}

}  // namespace atcalc::io
