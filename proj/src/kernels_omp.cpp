#include "atcalc/kernels.hpp"

#include <bit>
#include <cstdint>

namespace atcalc::kernels::parallel {

namespace {

using Word = StateSet::Word;

// Each iteration owns one output word, so threads never share a write target.
template <class Keep>
StateSet word_parallel(const TransitionSystem& ts, const StateSet& within, Keep keep) {
  StateSet out(ts.size());
  const auto in = within.words();
  auto dst = out.words();
  const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static) if (in.size() >= kMinParallelWords)
  for (std::int64_t w = 0; w < n; ++w) {
    Word bits = in[w];
    Word result = 0;
    while (bits != 0) {
      const int bit = std::countr_zero(bits);
      const StateId s{static_cast<std::uint32_t>(w * 64 + bit)};
      if (keep(s)) result |= Word{1} << bit;
      bits &= bits - 1;
    }
    dst[w] = result;
  }
  return out;
}

}  // namespace

StateSet pre_exists(const TransitionSystem& ts, const StateSet& within, const StateSet& target) {
  return word_parallel(ts, within, [&](StateId s) {
    for (auto t : ts.successors(s))
      if (target.contains(t)) return true;
    return false;
  });
}

StateSet pre_forall(const TransitionSystem& ts, const StateSet& within, const StateSet& target) {
  return word_parallel(ts, within, [&](StateId s) {
    for (auto t : ts.successors(s))
      if (within.contains(t) && !target.contains(t)) return false;
    return true;
  });
}

}  // namespace atcalc::kernels::parallel
