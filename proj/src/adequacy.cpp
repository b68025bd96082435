#include "atcalc/adequacy.hpp"

#include "atcalc/ctl.hpp"
#include "atcalc/errors.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace atcalc {

namespace {

bool ef_from(const KripkeStructure& k, const StateSet& goal) {
  return check(k, CtlFormula::ef(CtlFormula::atom(goal)));
}

constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();

// Distance of every state to `goal` along forward transitions.
std::vector<std::uint32_t> distances_to(const TransitionSystem& ts, const StateSet& goal) {
  std::vector<std::uint32_t> dist(ts.size(), kFar);
  std::deque<StateId> queue;
  goal.for_each([&](StateId s) {
    dist[s.value] = 0;
    queue.push_back(s);
  });
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (auto p : ts.predecessors(s)) {
      if (dist[p.value] == kFar) {
        dist[p.value] = dist[s.value] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

AttackTree chain_from(const TransitionSystem& ts, StateId start, const StateSet& goal,
                      const std::vector<std::uint32_t>& dist, const StateSet& chain_pre) {
  const std::size_t n = ts.size();
  std::vector<AttackTree> leaves;
  StateId at = start;
  while (dist[at.value] > 0) {
    // Smallest-id successor one step closer keeps witnesses deterministic.
    StateId next{kFar};
    for (auto t : ts.successors(at)) {
      if (dist[t.value] + 1 == dist[at.value] && t.value < next.value) next = t;
    }
    const bool final_step = dist[next.value] == 0;
    leaves.push_back(AttackTree::base(
        AttackGoal{StateSet::of(n, {at.value}), final_step ? goal : StateSet::of(n, {next.value})}));
    at = next;
  }
  return AttackTree::and_node(std::move(leaves), AttackGoal{chain_pre, goal});
}

}  // namespace

AdequacyReport check_at_ef(const TransitionSystem& ts, const AttackTree& t) {
  const AttackGoal& goal = attack(t);
  AdequacyReport report{t, goal, reach_close(ts, goal.pre)};
  report.tree_valid = is_valid(ts, t);
  report.ef_holds = ef_from(report.kripke, goal.post);
  report.consistent = !report.tree_valid || report.ef_holds;
  if (!report.consistent) throw EngineInconsistency("valid attack tree whose goal is not EF-reachable");
  return report;
}

AdequacyReport check_atv_ef(const TransitionSystem& ts, const AttackTree& t, std::size_t depth) {
  const AttackGoal& goal = attack(t);
  AdequacyReport report{t, goal, reach_close(ts, goal.pre)};
  const RefinementSearch search = has_valid_refinement(t, ts, depth);
  report.tree_valid = search.tree.has_value();
  report.antecedent_inconclusive = search.depth_exhausted;
  report.ef_holds = ef_from(report.kripke, goal.post);
  report.consistent = !report.tree_valid || report.ef_holds;
  if (!report.consistent) throw EngineInconsistency("validly refinable attack tree whose goal is not EF-reachable");
  return report;
}

std::optional<AttackTree> synthesize(const TransitionSystem& ts, const StateSet& init, const StateSet& goal) {
  if (init.universe() != ts.size() || goal.universe() != ts.size()) {
    throw std::invalid_argument("synthesize: sets do not range over the transition system");
  }
  if (init.empty()) throw std::invalid_argument("synthesize: initial state set must be nonempty");

  const KripkeStructure k = reach_close(ts, init);
  if (!ef_from(k, goal)) return std::nullopt;

  const auto dist = distances_to(ts, goal);
  const std::size_t n = ts.size();
  std::vector<AttackTree> branches;
  bool reachable = true;
  init.for_each([&](StateId i) {
    if (dist[i.value] == kFar) {
      reachable = false;
      return;
    }
    branches.push_back(chain_from(ts, i, goal, dist, StateSet::of(n, {i.value})));
  });
  if (!reachable) throw SelfCheckFailed("EF holds but some initial state has no path to the goal");

  AttackTree witness = branches.size() == 1
                           ? AttackTree::and_node({branches.front().children().begin(),
                                                   branches.front().children().end()},
                                                  AttackGoal{init, goal})
                           : AttackTree::or_node(std::move(branches), AttackGoal{init, goal});
  if (!is_valid(ts, witness)) throw SelfCheckFailed("synthesized attack tree failed its validity check");
  return witness;
}

}  // namespace atcalc
