#include "atcalc/attack_tree.hpp"

#include "atcalc/adequacy.hpp"
#include "atcalc/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace atcalc {

AttackTree AttackTree::base(AttackGoal goal) { return AttackTree(Kind::base, {}, std::move(goal)); }

AttackTree AttackTree::and_node(std::vector<AttackTree> children, AttackGoal goal) {
  return AttackTree(Kind::conjunction, std::move(children), std::move(goal));
}

AttackTree AttackTree::or_node(std::vector<AttackTree> children, AttackGoal goal) {
  return AttackTree(Kind::disjunction, std::move(children), std::move(goal));
}

std::size_t AttackTree::size() const noexcept {
  std::size_t n = 1;
  for (const auto& c : children_) n += c.size();
  return n;
}

std::size_t AttackTree::height() const noexcept {
  std::size_t h = 0;
  for (const auto& c : children_) h = std::max(h, c.height() + 1);
  return h;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::depth_exhausted: return "depth-exhausted";
  }
  return "?";
}

namespace {

void require_universe(const AttackTree& t, std::size_t n) {
  if (t.goal().pre.universe() != n || t.goal().post.universe() != n) {
    throw std::invalid_argument("attack tree goal does not range over the transition system");
  }
  for (const auto& c : t.children()) require_universe(c, n);
}

bool valid(const TransitionSystem& ts, const AttackTree& t);

bool valid_base(const TransitionSystem& ts, const StateSet& pre, const StateSet& post) {
  bool ok = true;
  pre.for_each([&](StateId x) {
    if (!ok) return;
    const auto succ = ts.successors(x);
    ok = std::any_of(succ.begin(), succ.end(), [&](StateId y) { return post.contains(y); });
  });
  return ok;
}

bool valid_and(const TransitionSystem& ts, std::span<const AttackTree> as, const StateSet& pre,
               const StateSet& post) {
  if (as.empty()) return pre.is_subset_of(post);
  const AttackTree& a = as.front();
  if (as.size() == 1) return a.goal().pre == pre && a.goal().post == post && valid(ts, a);
  return a.goal().pre == pre && valid(ts, a) && valid_and(ts, as.subspan(1), a.goal().post, post);
}

bool valid_or(const TransitionSystem& ts, std::span<const AttackTree> as, const StateSet& pre,
              const StateSet& post) {
  if (as.empty()) return pre.is_subset_of(post);
  const AttackTree& a = as.front();
  if (as.size() == 1) return pre.is_subset_of(a.goal().pre) && a.goal().post.is_subset_of(post) && valid(ts, a);
  return a.goal().pre.is_subset_of(pre) && a.goal().post.is_subset_of(post) && valid(ts, a) &&
         valid_or(ts, as.subspan(1), pre - a.goal().pre, post);
}

bool valid(const TransitionSystem& ts, const AttackTree& t) {
  switch (t.kind()) {
    case AttackTree::Kind::base: return valid_base(ts, t.goal().pre, t.goal().post);
    case AttackTree::Kind::conjunction: return valid_and(ts, t.children(), t.goal().pre, t.goal().post);
    case AttackTree::Kind::disjunction: return valid_or(ts, t.children(), t.goal().pre, t.goal().post);
  }
  return false;
}

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

class DepthSearch {
 public:
  explicit DepthSearch(const AttackTree& abstract) : abstract_(abstract) {}

  std::size_t depth_to(const AttackTree& concrete) {
    if (auto it = memo_.find(&concrete); it != memo_.end()) return it->second;
    const std::size_t d = compute(concrete);
    memo_.emplace(&concrete, d);
    return d;
  }

 private:
  std::size_t compute(const AttackTree& c) {
    if (c == abstract_) return 0;
    // Every rule keeps the root goal.
    if (c.goal() != abstract_.goal()) return kUnreachable;
    if (c.kind() == AttackTree::Kind::disjunction) {
      if (c.children().empty()) return kUnreachable;
      std::size_t deepest = 0;
      for (const auto& member : c.children()) {
        const std::size_t d = depth_to(member);
        if (d == kUnreachable) return kUnreachable;
        deepest = std::max(deepest, d);
      }
      return deepest + 1;
    }
    if (c.kind() == AttackTree::Kind::conjunction && abstract_.kind() == AttackTree::Kind::conjunction) {
      return segment_cost(abstract_.children(), c.children());
    }
    return kUnreachable;
  }

  // Minimal number of refI steps turning list `from` into list `to`: every
  // non-base entry survives verbatim, every base leaf becomes a nonempty run.
  static std::size_t segment_cost(std::span<const AttackTree> from, std::span<const AttackTree> to) {
    const std::size_t n = from.size();
    const std::size_t m = to.size();
    std::vector<std::size_t> prev(m + 1, kUnreachable);
    std::vector<std::size_t> cur(m + 1, kUnreachable);
    prev[0] = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      std::fill(cur.begin(), cur.end(), kUnreachable);
      const AttackTree& leaf = from[i - 1];
      for (std::size_t j = 1; j <= m; ++j) {
        if (!leaf.is_base()) {
          if (prev[j - 1] != kUnreachable && to[j - 1] == leaf) cur[j] = prev[j - 1];
          continue;
        }
        for (std::size_t k = 1; k <= j; ++k) {
          if (prev[j - k] == kUnreachable) continue;
          const std::size_t step = (k == 1 && to[j - 1] == leaf) ? 0 : 1;
          cur[j] = std::min(cur[j], prev[j - k] + step);
        }
      }
      std::swap(prev, cur);
    }
    return prev[m];
  }

  const AttackTree& abstract_;
  std::unordered_map<const AttackTree*, std::size_t> memo_;
};

std::optional<AttackTree> bridge(const TransitionSystem& ts, const StateSet& from, const StateSet& to) {
  if (from.is_subset_of(to)) return AttackTree::and_node({}, AttackGoal{from, to});
  return synthesize(ts, from, to);
}

// Checks whether a run of base leaves already chains from `from` to `to`.
bool run_chains(const TransitionSystem& ts, std::span<const AttackTree> run, const StateSet& from,
                const StateSet& to) {
  const StateSet* at = &from;
  for (const auto& leaf : run) {
    if (leaf.goal().pre != *at || !valid(ts, leaf)) return false;
    at = &leaf.goal().post;
  }
  return *at == to;
}

}  // namespace

bool is_valid(const TransitionSystem& ts, const AttackTree& t) {
  require_universe(t, ts.size());
  return valid(ts, t);
}

std::optional<std::size_t> refinement_depth(const AttackTree& abstract, const AttackTree& concrete) {
  DepthSearch search(abstract);
  const std::size_t d = search.depth_to(concrete);
  if (d == kUnreachable) return std::nullopt;
  return d;
}

Verdict refines_to(const AttackTree& abstract, const AttackTree& concrete, std::size_t depth) {
  const auto d = refinement_depth(abstract, concrete);
  if (!d) return Verdict::no;
  return *d <= depth ? Verdict::yes : Verdict::depth_exhausted;
}

Verdict refines_to_valid(const AttackTree& abstract, const AttackTree& concrete, const TransitionSystem& ts,
                         std::size_t depth) {
  if (!is_valid(ts, concrete)) return Verdict::no;
  return refines_to(abstract, concrete, depth);
}

RefinementSearch has_valid_refinement(const AttackTree& a, const TransitionSystem& ts, std::size_t depth) {
  if (is_valid(ts, a)) return {a, false};
  // Base leaves and or-nodes only refine into or-trees whose first member is
  // again a refinement; the least such tree would have to be `a` itself.
  if (a.kind() != AttackTree::Kind::conjunction || a.children().empty()) return {};

  const auto children = a.children();
  const StateSet& final_post = a.goal().post;
  std::vector<AttackTree> refined;
  StateSet at = a.goal().pre;
  std::size_t i = 0;
  while (i < children.size()) {
    const AttackTree& child = children[i];
    if (!child.is_base()) {
      const bool last = i + 1 == children.size();
      if (child.goal().pre != at || (last && child.goal().post != final_post) || !valid(ts, child)) return {};
      at = child.goal().post;
      refined.push_back(child);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < children.size() && children[j].is_base()) ++j;
    const StateSet& to = j == children.size() ? final_post : children[j].goal().pre;
    const auto run = children.subspan(i, j - i);
    if (run_chains(ts, run, at, to)) {
      refined.insert(refined.end(), run.begin(), run.end());
    } else {
      auto step = bridge(ts, at, to);
      if (!step) return {};
      refined.push_back(std::move(*step));
      for (std::size_t k = i + 1; k < j; ++k) refined.push_back(AttackTree::and_node({}, AttackGoal{to, to}));
    }
    at = to;
    i = j;
  }

  AttackTree candidate = AttackTree::and_node(std::move(refined), a.goal());
  if (!valid(ts, candidate)) throw SelfCheckFailed("refined attack tree failed its validity check");
  switch (refines_to(a, candidate, depth)) {
    case Verdict::yes: return {std::move(candidate), false};
    case Verdict::depth_exhausted: return {std::nullopt, true};
    case Verdict::no: break;
  }
  throw SelfCheckFailed("constructed tree is not a refinement of its source");
}

}  // namespace atcalc
