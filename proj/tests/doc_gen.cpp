#include "doc_gen.hpp"

#include <algorithm>
#include <string>

namespace docgen {

namespace io = atcalc::io;
namespace infra = atcalc::infra;

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& one_of(Rng& rng, const std::vector<T>& v) {
  return v[pick(rng, 0, v.size() - 1)];
}

std::string name(Rng& rng, const std::string& prefix) {
  static const std::vector<std::string> odd{"ä", "/", "~", "\"q\"", "a b", "\\", "\t", "x~1", "é/ü"};
  std::string s = prefix + std::to_string(pick(rng, 0, 99));
  if (coin(rng, 0.15)) s += one_of(rng, odd);
  return s;
}

std::vector<std::string> distinct_names(Rng& rng, const std::string& prefix, std::size_t lo, std::size_t hi) {
  std::vector<std::string> out;
  const std::size_t n = pick(rng, lo, hi);
  while (out.size() < n) {
    auto s = name(rng, prefix);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

std::set<std::string> subset(Rng& rng, const std::vector<std::string>& pool, double p = 0.4) {
  std::set<std::string> out;
  for (const auto& s : pool)
    if (coin(rng, p)) out.insert(s);
  return out;
}

infra::Payload payload(Rng& rng) {
  if (coin(rng, 0.7)) return static_cast<std::int64_t>(rng()) >> pick(rng, 0, 62);
  return name(rng, "p");
}

struct Context {
  std::vector<std::string> states;  // raw system only
  std::vector<std::string> locations;
  std::vector<std::string> identities;
  std::vector<std::string> sets;
  std::vector<std::string> trees;
  std::vector<std::string> formulas;
  bool raw = true;
};

io::SetExpr set_expr(Rng& rng, const Context& cx, std::size_t depth) {
  using K = io::SetExpr::Kind;
  std::vector<K> kinds{K::ids, K::initial, K::all};
  if (cx.raw) kinds.push_back(K::states);
  else kinds.insert(kinds.end(), {K::actor_at, K::datum_at, K::enables, K::owner_is});
  if (!cx.sets.empty()) kinds.insert(kinds.end(), {K::ref, K::ref});
  if (depth > 0) kinds.insert(kinds.end(), {K::negation, K::conjunction, K::disjunction});

  io::SetExpr e;
  e.kind = one_of(rng, kinds);
  switch (e.kind) {
    case K::ref: e.name = one_of(rng, cx.sets); break;
    case K::states:
      for (std::size_t i = pick(rng, 0, 3); i > 0; --i) e.states.push_back(one_of(rng, cx.states));
      break;
    case K::ids:
      for (std::size_t i = pick(rng, 0, 3); i > 0; --i) e.ids.push_back(static_cast<std::uint32_t>(pick(rng, 0, 5)));
      break;
    case K::initial:
    case K::all: break;
    case K::actor_at:
      e.actor = one_of(rng, cx.identities);
      e.location = one_of(rng, cx.locations);
      break;
    case K::datum_at:
      e.location = one_of(rng, cx.locations);
      e.payload = payload(rng);
      if (coin(rng)) e.owner = one_of(rng, cx.identities);
      break;
    case K::enables:
      e.location = one_of(rng, cx.locations);
      e.actor = one_of(rng, cx.identities);
      e.action = static_cast<infra::Action>(pick(rng, 0, 3));
      break;
    case K::owner_is:
      e.owner = one_of(rng, cx.identities);
      for (std::size_t i = pick(rng, 0, 3); i > 0; --i) e.payloads.push_back(payload(rng));
      break;
    case K::negation: e.operands.push_back(set_expr(rng, cx, depth - 1)); break;
    case K::conjunction:
    case K::disjunction:
      for (std::size_t i = pick(rng, 1, 3); i > 0; --i) e.operands.push_back(set_expr(rng, cx, depth - 1));
      break;
  }
  return e;
}

io::GoalExpr goal(Rng& rng, const Context& cx) { return {set_expr(rng, cx, 1), set_expr(rng, cx, 1)}; }

io::TreeExpr tree_expr(Rng& rng, const Context& cx, std::size_t depth) {
  io::TreeExpr t;
  if (!cx.trees.empty() && coin(rng, 0.2)) {
    t.kind = io::TreeExpr::Kind::ref;
    t.name = one_of(rng, cx.trees);
    return t;
  }
  t.goal = goal(rng, cx);
  if (depth == 0 || coin(rng, 0.35)) {
    t.kind = io::TreeExpr::Kind::base;
    return t;
  }
  t.kind = coin(rng) ? io::TreeExpr::Kind::conjunction : io::TreeExpr::Kind::disjunction;
  for (std::size_t i = pick(rng, 0, 3); i > 0; --i) t.children.push_back(tree_expr(rng, cx, depth - 1));
  return t;
}

io::FormulaExpr formula_expr(Rng& rng, const Context& cx, std::size_t depth) {
  using Op = atcalc::CtlFormula::Op;
  io::FormulaExpr f;
  if (!cx.formulas.empty() && coin(rng, 0.2)) {
    f.is_ref = true;
    f.name = one_of(rng, cx.formulas);
    return f;
  }
  f.op = depth == 0 ? Op::atom : static_cast<Op>(pick(rng, 0, 10));
  switch (f.op) {
    case Op::atom: f.atom = set_expr(rng, cx, 1); break;
    case Op::conjunction:
    case Op::disjunction:
    case Op::eu:
      f.operands.push_back(formula_expr(rng, cx, depth - 1));
      f.operands.push_back(formula_expr(rng, cx, depth - 1));
      break;
    default: f.operands.push_back(formula_expr(rng, cx, depth - 1)); break;
  }
  return f;
}

io::Query query(Rng& rng, const Context& cx) {
  using K = io::Query::Kind;
  io::Query q;
  q.kind = static_cast<K>(pick(rng, 0, 5));
  switch (q.kind) {
    case K::check_validity:
    case K::at_ef: q.tree = tree_expr(rng, cx, 2); break;
    case K::atv_ef:
      q.tree = tree_expr(rng, cx, 2);
      if (coin(rng)) q.depth = pick(rng, 0, 20);
      break;
    case K::refine_check:
      q.abstract = tree_expr(rng, cx, 2);
      q.concrete = tree_expr(rng, cx, 2);
      if (coin(rng)) q.depth = pick(rng, 0, 20);
      break;
    case K::mc: q.formula = formula_expr(rng, cx, 3); break;
    case K::synth:
      q.init = set_expr(rng, cx, 1);
      q.goal = set_expr(rng, cx, 1);
      break;
  }
  return q;
}

infra::Condition condition(Rng& rng, const Context& cx, std::size_t depth) {
  switch (pick(rng, 0, depth > 0 ? 6 : 3)) {
    case 0: return infra::Condition::always();
    case 1: return infra::Condition::has_credential(name(rng, "c"));
    case 2: return infra::Condition::at(one_of(rng, cx.locations));
    case 3: return infra::Condition::exists_at_with_credential(one_of(rng, cx.locations), name(rng, "c"));
    case 4: return infra::Condition::all_of(condition(rng, cx, depth - 1), condition(rng, cx, depth - 1));
    case 5: return infra::Condition::any_of(condition(rng, cx, depth - 1), condition(rng, cx, depth - 1));
    default: return infra::Condition::negation(condition(rng, cx, depth - 1));
  }
}

io::InfrastructureDecl infrastructure(Rng& rng, const Context& cx) {
  io::InfrastructureDecl d;
  auto& g = d.graph;
  g.locations.insert(cx.locations.begin(), cx.locations.end());
  for (const auto& a : cx.locations)
    for (const auto& b : cx.locations)
      if (coin(rng, 0.3)) g.edges.emplace(a, b);
  for (const auto& id : cx.identities) {
    infra::Credentials c;
    for (std::size_t i = pick(rng, 0, 2); i > 0; --i) c.credentials.insert(name(rng, "c"));
    if (coin(rng, 0.3)) c.roles.insert(name(rng, "r"));
    g.credentials.emplace(id, std::move(c));
    if (coin(rng, 0.7)) g.placement[one_of(rng, cx.locations)].insert(id);
  }
  if (coin(rng, 0.2)) g.placement.try_emplace(one_of(rng, cx.locations));
  for (const auto& l : cx.locations) {
    if (coin(rng, 0.5)) continue;
    infra::LocationState st;
    if (coin(rng)) st.component = name(rng, "state");
    for (std::size_t i = pick(rng, 0, 2); i > 0; --i)
      st.data.insert(infra::LabelledDatum{infra::DlmLabel{one_of(rng, cx.identities), subset(rng, cx.identities)}, payload(rng)});
    g.loc_state.emplace(l, std::move(st));
  }
  for (const auto& l : cx.locations) {
    if (coin(rng, 0.3)) continue;
    std::vector<infra::PolicyClause> clauses;
    for (std::size_t i = pick(rng, 0, 2); i > 0; --i) {
      infra::PolicyClause clause{condition(rng, cx, 2), {}};
      for (int a = 0; a < 4; ++a)
        if (coin(rng)) clause.actions.insert(static_cast<infra::Action>(a));
      clauses.push_back(std::move(clause));
    }
    d.rules.delta.emplace(l, std::move(clauses));
  }
  d.rules.dlm_enforced = coin(rng);
  std::vector<std::string> transforms{"decrement", "identity", "increment", "negate", "redact"};
  std::shuffle(transforms.begin(), transforms.end(), rng);
  transforms.resize(pick(rng, 0, transforms.size()));
  d.rules.transforms = transforms;
  for (std::size_t i = pick(rng, 0, 2); i > 0; --i)
    d.rules.put_data.push_back(infra::PutTemplate{one_of(rng, cx.identities), subset(rng, cx.identities), payload(rng)});
  return d;
}

}  // namespace

io::ScenarioDoc random_doc(Rng& rng) {
  io::ScenarioDoc doc;
  Context cx;
  cx.raw = coin(rng);
  if (coin(rng)) doc.description = name(rng, "scenario ");
  if (cx.raw) {
    io::RawSystemDecl sys;
    sys.states = distinct_names(rng, "s", 1, 6);
    for (const auto& a : sys.states)
      for (const auto& b : sys.states)
        if (coin(rng, 0.3)) sys.edges.emplace_back(a, b);
    std::shuffle(sys.edges.begin(), sys.edges.end(), rng);
    for (const auto& s : sys.states)
      if (coin(rng, 0.4)) sys.initial.push_back(s);
    cx.states = sys.states;
    doc.system = std::move(sys);
  } else {
    cx.locations = distinct_names(rng, "loc", 1, 4);
    cx.identities = distinct_names(rng, "id", 1, 3);
    doc.infrastructure = infrastructure(rng, cx);
  }

  // Each definition may only refer to earlier ones, which keeps references acyclic.
  for (std::size_t i = pick(rng, 0, 5); i > 0; --i) {
    const auto n = name(rng, "S");
    if (doc.sets.count(n)) continue;
    doc.sets.emplace(n, set_expr(rng, cx, 2));
    cx.sets.push_back(n);
  }
  for (std::size_t i = pick(rng, 0, 4); i > 0; --i) {
    const auto n = name(rng, "T");
    if (doc.trees.count(n)) continue;
    doc.trees.emplace(n, tree_expr(rng, cx, 3));
    cx.trees.push_back(n);
  }
  for (std::size_t i = pick(rng, 0, 4); i > 0; --i) {
    const auto n = name(rng, "F");
    if (doc.formulas.count(n)) continue;
    doc.formulas.emplace(n, formula_expr(rng, cx, 3));
    cx.formulas.push_back(n);
  }
  for (std::size_t i = pick(rng, 0, 4); i > 0; --i) doc.queries.emplace(name(rng, "Q"), query(rng, cx));
  return doc;
}

}  // namespace docgen
