#pragma once

// Pre-image kernels behind the CTL fixpoints. Each has a serial reference
// version and an OpenMP version; both must return identical sets.

#include "atcalc/kripke.hpp"
#include "atcalc/state_set.hpp"

namespace atcalc::kernels {

namespace serial {

/// {s ∈ within | some successor of s lies in target}. Requires target ⊆ within.
StateSet pre_exists(const TransitionSystem& ts, const StateSet& within, const StateSet& target);

/// {s ∈ within | every successor of s inside `within` lies in target}.
/// States without successors in `within` qualify vacuously.
StateSet pre_forall(const TransitionSystem& ts, const StateSet& within, const StateSet& target);

}  // namespace serial

namespace parallel {

StateSet pre_exists(const TransitionSystem& ts, const StateSet& within, const StateSet& target);
StateSet pre_forall(const TransitionSystem& ts, const StateSet& within, const StateSet& target);

/// Word count below which the OpenMP kernels run on the calling thread.
inline constexpr std::size_t kMinParallelWords = 64;

}  // namespace parallel

}  // namespace atcalc::kernels
