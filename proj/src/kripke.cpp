#include "atcalc/kripke.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace atcalc {

TransitionSystem::TransitionSystem(const std::vector<std::vector<StateId>>& successors) {
  const std::size_t n = successors.size();
  offsets_.assign(n + 1, 0);
  reverse_offsets_.assign(n + 1, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    for (auto t : successors[s]) {
      if (t.value >= n) {
        throw std::invalid_argument("transition " + std::to_string(s) + " -> " + std::to_string(t.value) +
                                    " targets a state outside the system");
      }
      if (seen[t.value]) {
        throw std::invalid_argument("duplicate transition " + std::to_string(s) + " -> " +
                                    std::to_string(t.value));
      }
      seen[t.value] = true;
      ++reverse_offsets_[t.value + 1];
    }
    for (auto t : successors[s]) seen[t.value] = false;
    offsets_[s + 1] = offsets_[s] + static_cast<std::uint32_t>(successors[s].size());
  }
  targets_.reserve(offsets_[n]);
  for (const auto& list : successors) targets_.insert(targets_.end(), list.begin(), list.end());

  for (std::size_t s = 0; s < n; ++s) reverse_offsets_[s + 1] += reverse_offsets_[s];
  sources_.resize(targets_.size());
  std::vector<std::uint32_t> fill(reverse_offsets_.begin(), reverse_offsets_.end() - 1);
  for (std::size_t s = 0; s < n; ++s) {
    for (auto t : successors[s]) sources_[fill[t.value]++] = StateId{static_cast<std::uint32_t>(s)};
  }
}

bool TransitionSystem::has_transition(StateId from, StateId to) const {
  if (from.value >= size()) return false;
  const auto succ = successors(from);
  return std::find(succ.begin(), succ.end(), to) != succ.end();
}

KripkeStructure::KripkeStructure(const TransitionSystem& system, StateSet states, StateSet init)
    : system_(&system), states_(std::move(states)), init_(std::move(init)) {
  if (states_.universe() != system.size() || init_.universe() != system.size()) {
    throw std::invalid_argument("Kripke structure sets do not range over the transition system");
  }
  if (!init_.is_subset_of(states_)) throw std::invalid_argument("Kripke structure: init not contained in states");
}

std::optional<std::vector<StateId>> KripkeStructure::witness_path(StateId target) const {
  if (parent_.empty() || !states_.contains(target)) return std::nullopt;
  std::vector<StateId> path{target};
  while (!init_.contains(path.back())) {
    const auto p = parent_[path.back().value];
    if (p == kNoParent) return std::nullopt;
    path.push_back(StateId{p});
  }
  std::reverse(path.begin(), path.end());
  return path;
}

KripkeStructure reach_close(const TransitionSystem& ts, const StateSet& init) {
  KripkeStructure k(ts, init, init);
  k.parent_.assign(ts.size(), KripkeStructure::kNoParent);
  std::deque<StateId> queue;
  init.for_each([&](StateId s) { queue.push_back(s); });
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (auto t : ts.successors(s)) {
      if (!k.states_.contains(t)) {
        k.states_.insert(t);
        k.parent_[t.value] = s.value;
        queue.push_back(t);
      }
    }
  }
  return k;
}

bool holds(const KripkeStructure& k, const StateSet& f) { return k.init().is_subset_of(k.states() & f); }

}  // namespace atcalc
