#pragma once

#include "atcalc/kripke.hpp"
#include "atcalc/state_set.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace atcalc {

/// Initial states and attack property of an attack.
struct AttackGoal {
  StateSet pre;
  StateSet post;

  bool operator==(const AttackGoal&) const = default;
};

/// Base attacks and and/or compositions. Child lists may be empty.
class AttackTree {
 public:
  enum class Kind { base, conjunction, disjunction };

  static AttackTree base(AttackGoal goal);
  static AttackTree and_node(std::vector<AttackTree> children, AttackGoal goal);
  static AttackTree or_node(std::vector<AttackTree> children, AttackGoal goal);

  Kind kind() const noexcept { return kind_; }
  const AttackGoal& goal() const noexcept { return goal_; }
  std::span<const AttackTree> children() const noexcept { return children_; }

  bool is_base() const noexcept { return kind_ == Kind::base; }

  /// Number of nodes.
  std::size_t size() const noexcept;
  /// Height; a lone base attack has height 0.
  std::size_t height() const noexcept;

  bool operator==(const AttackTree&) const = default;

 private:
  AttackTree(Kind kind, std::vector<AttackTree> children, AttackGoal goal)
      : kind_(kind), goal_(std::move(goal)), children_(std::move(children)) {}

  Kind kind_;
  AttackGoal goal_;
  std::vector<AttackTree> children_;
};

/// Goal stored at the root.
inline const AttackGoal& attack(const AttackTree& t) noexcept { return t.goal(); }

/// The validity judgment ⊢ t, one case per constructor:
///  - base (s0,s1): every state of s0 has a one-step successor in s1;
///  - and-lists chain their goals from pre to post;
///  - or-lists cover pre, each alternative ending inside post.
/// Throws std::invalid_argument if a set in t does not range over ts.
bool is_valid(const TransitionSystem& ts, const AttackTree& t);

inline constexpr std::size_t kDefaultRefinementDepth = 8;

enum class Verdict { yes, no, depth_exhausted };

const char* to_string(Verdict v) noexcept;

/// Smallest derivation depth of abstract ⊑ concrete, or nullopt when no
/// derivation exists. Depth counts ref_refl as 0, each refI step as 1 (chained
/// through ref_trans) and ref_or as one more than its deepest member.
///
/// refI replaces one base leaf of an and-list by a nonempty list; candidate
/// lists are taken from `concrete` only.
std::optional<std::size_t> refinement_depth(const AttackTree& abstract, const AttackTree& concrete);

/// abstract ⊑ concrete, searched up to `depth`. Derivations that exist but
/// need more than `depth` steps are reported as depth_exhausted, never as no.
Verdict refines_to(const AttackTree& abstract, const AttackTree& concrete,
                   std::size_t depth = kDefaultRefinementDepth);

/// abstract ⊑⊢ concrete: refines_to and concrete is valid.
Verdict refines_to_valid(const AttackTree& abstract, const AttackTree& concrete, const TransitionSystem& ts,
                         std::size_t depth = kDefaultRefinementDepth);

struct RefinementSearch {
  std::optional<AttackTree> tree;
  bool depth_exhausted = false;
};

/// ⊢V a: some valid tree a refines to within `depth`. Valid trees witness
/// themselves. Otherwise only and-rooted trees can gain a valid refinement;
/// each offending run of base leaves is bridged by a synthesized witness.
RefinementSearch has_valid_refinement(const AttackTree& a, const TransitionSystem& ts,
                                      std::size_t depth = kDefaultRefinementDepth);

}  // namespace atcalc
