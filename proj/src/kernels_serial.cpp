#include "atcalc/kernels.hpp"

namespace atcalc::kernels::serial {

StateSet pre_exists(const TransitionSystem& ts, const StateSet& within, const StateSet& target) {
  StateSet out(ts.size());
  within.for_each([&](StateId s) {
    for (auto t : ts.successors(s)) {
      if (target.contains(t)) {
        out.insert(s);
        return;
      }
    }
  });
  return out;
}

StateSet pre_forall(const TransitionSystem& ts, const StateSet& within, const StateSet& target) {
  StateSet out(ts.size());
  within.for_each([&](StateId s) {
    for (auto t : ts.successors(s)) {
      if (within.contains(t) && !target.contains(t)) return;
    }
    out.insert(s);
  });
  return out;
}

}  // namespace atcalc::kernels::serial
