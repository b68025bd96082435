#pragma once

#include "atcalc/errors.hpp"
#include "atcalc/state_set.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace atcalc {

/// Finite one-step relation over dense state ids, stored as forward and
/// backward adjacency arrays.
class TransitionSystem {
 public:
  TransitionSystem() = default;

  /// Throws std::invalid_argument if a target is out of range or a successor
  /// list repeats a target.
  explicit TransitionSystem(const std::vector<std::vector<StateId>>& successors);

  std::size_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t transition_count() const noexcept { return targets_.size(); }

  std::span<const StateId> successors(StateId s) const {
    return {targets_.data() + offsets_[s.value], targets_.data() + offsets_[s.value + 1]};
  }
  std::span<const StateId> predecessors(StateId s) const {
    return {sources_.data() + reverse_offsets_[s.value], sources_.data() + reverse_offsets_[s.value + 1]};
  }
  bool has_transition(StateId from, StateId to) const;

  StateSet empty_set() const { return StateSet(size()); }
  StateSet all_states() const { return StateSet::full(size()); }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<StateId> targets_;
  std::vector<std::uint32_t> reverse_offsets_;
  std::vector<StateId> sources_;
};

/// Result of materializing a state space: the relation plus the payload table
/// (ids are positions in `states`, assigned in BFS discovery order).
template <class Payload, class Hash = std::hash<Payload>>
struct ExploredSystem {
  TransitionSystem system;
  std::vector<Payload> states;
  std::unordered_map<Payload, StateId, Hash> index;
  std::size_t seed_count = 0;
  std::size_t depth = 0;

  std::optional<StateId> find(const Payload& p) const {
    auto it = index.find(p);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  StateSet seeds() const {
    StateSet s(states.size());
    for (std::uint32_t i = 0; i < seed_count; ++i) s.insert(StateId{i});
    return s;
  }
};

/// Breadth-first closure of `seeds` under `successors`, interning payloads by
/// equality. `successors` must be deterministic; its order fixes id order.
/// Throws BoundExceeded once more than `bound` distinct payloads are found.
template <class Payload, class Hash = std::hash<Payload>, class Successors>
ExploredSystem<Payload, Hash> build_system(const std::vector<Payload>& seeds, Successors&& successors,
                                           std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("build_system: bound must be at least 1");
  ExploredSystem<Payload, Hash> out;
  std::vector<std::vector<StateId>> edges;

  auto intern = [&](const Payload& p) -> std::pair<StateId, bool> {
    if (auto it = out.index.find(p); it != out.index.end()) return {it->second, false};
    if (out.states.size() >= bound) throw BoundExceeded(bound);
    const StateId id{static_cast<std::uint32_t>(out.states.size())};
    out.states.push_back(p);
    out.index.emplace(p, id);
    edges.emplace_back();
    return {id, true};
  };

  for (const auto& seed : seeds) intern(seed);
  out.seed_count = out.states.size();

  // Layer-by-layer so the depth statistic is exact.
  std::size_t layer_begin = 0;
  std::size_t layer_end = out.states.size();
  while (layer_begin < layer_end) {
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const Payload current = out.states[i];
      std::vector<StateId> targets;
      for (const auto& next : successors(current)) {
        const StateId id = intern(next).first;
        if (std::find(targets.begin(), targets.end(), id) == targets.end()) targets.push_back(id);
      }
      edges[i] = std::move(targets);
    }
    layer_begin = layer_end;
    layer_end = out.states.size();
    if (layer_begin < layer_end) ++out.depth;
  }

  out.system = TransitionSystem(edges);
  return out;
}

/// A transition system with a designated state set and initial states. Holds a
/// non-owning reference: the system must outlive the structure.
class KripkeStructure {
 public:
  /// Throws std::invalid_argument unless init ⊆ states and both range over `system`.
  KripkeStructure(const TransitionSystem& system, StateSet states, StateSet init);

  const TransitionSystem& system() const noexcept { return *system_; }
  const StateSet& states() const noexcept { return states_; }
  const StateSet& init() const noexcept { return init_; }

  /// Path from some initial state to `target` along BFS parents. Only
  /// available for structures produced by reach_close.
  std::optional<std::vector<StateId>> witness_path(StateId target) const;

 private:
  friend KripkeStructure reach_close(const TransitionSystem&, const StateSet&);

  static constexpr std::uint32_t kNoParent = UINT32_MAX;

  const TransitionSystem* system_;
  StateSet states_;
  StateSet init_;
  std::vector<std::uint32_t> parent_;
};

/// Least set containing `init` and closed under successors.
KripkeStructure reach_close(const TransitionSystem& ts, const StateSet& init);

/// M ⊢ f: every initial state lies in states ∩ f.
bool holds(const KripkeStructure& k, const StateSet& f);

}  // namespace atcalc
