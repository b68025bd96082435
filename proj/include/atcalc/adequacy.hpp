#pragma once

#include "atcalc/attack_tree.hpp"
#include "atcalc/kripke.hpp"

#include <cstddef>
#include <optional>

namespace atcalc {

/// One instance of the correctness implication: valid tree ⇒ EF goal.
struct AdequacyReport {
  AttackTree tree;
  AttackGoal goal;
  KripkeStructure kripke;
  bool tree_valid = false;
  bool ef_holds = false;
  bool consistent = true;
  /// Set by check_atv_ef when the refinement search hit its depth bound.
  bool antecedent_inconclusive = false;
};

/// Builds Kripke(reach_close(ts, I), I) for (I, s) = attack(t), checks ⊢ t and
/// EF s. Throws EngineInconsistency if the tree is valid but EF s fails.
AdequacyReport check_at_ef(const TransitionSystem& ts, const AttackTree& t);

/// Same with ⊢V t (valid refinement within `depth`) as antecedent.
AdequacyReport check_atv_ef(const TransitionSystem& ts, const AttackTree& t,
                            std::size_t depth = kDefaultRefinementDepth);

/// Constructs a valid tree with attack (init, goal) whenever EF goal holds
/// from every state of init, nullopt otherwise.
///
/// Shape: one and-chain per initial state i, following a shortest path
/// i = x0 → … → xk into goal, with leaves N({x0},{x1}), …, N({xk-2},{xk-1})
/// and a final leaf N({xk-1}, goal); i ∈ goal yields the empty chain. Chains
/// carry goal ({i}, goal) and are joined by an or-node in id order; a single
/// initial state returns its chain with goal (init, goal).
///
/// Throws std::invalid_argument for empty `init`, SelfCheckFailed if the
/// result does not validate.
std::optional<AttackTree> synthesize(const TransitionSystem& ts, const StateSet& init, const StateSet& goal);

}  // namespace atcalc
