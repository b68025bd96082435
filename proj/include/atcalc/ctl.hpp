#pragma once

#include "atcalc/kripke.hpp"
#include "atcalc/state_set.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace atcalc {

/// CTL formula over StateSet atoms.
class CtlFormula {
 public:
  enum class Op { atom, negation, conjunction, disjunction, ex, ax, ef, af, eg, ag, eu };

  static CtlFormula atom(StateSet s);
  static CtlFormula negation(CtlFormula f);
  static CtlFormula conjunction(CtlFormula a, CtlFormula b);
  static CtlFormula disjunction(CtlFormula a, CtlFormula b);
  static CtlFormula ex(CtlFormula f) { return unary(Op::ex, std::move(f)); }
  static CtlFormula ax(CtlFormula f) { return unary(Op::ax, std::move(f)); }
  static CtlFormula ef(CtlFormula f) { return unary(Op::ef, std::move(f)); }
  static CtlFormula af(CtlFormula f) { return unary(Op::af, std::move(f)); }
  static CtlFormula eg(CtlFormula f) { return unary(Op::eg, std::move(f)); }
  static CtlFormula ag(CtlFormula f) { return unary(Op::ag, std::move(f)); }
  /// E[hold U goal]
  static CtlFormula eu(CtlFormula hold, CtlFormula goal);

  Op op() const noexcept { return op_; }
  const StateSet& atom_set() const noexcept { return atom_; }
  const std::vector<CtlFormula>& operands() const noexcept { return operands_; }

  bool operator==(const CtlFormula&) const = default;

 private:
  static CtlFormula unary(Op op, CtlFormula f);

  Op op_ = Op::atom;
  StateSet atom_;
  std::vector<CtlFormula> operands_;
};

std::string to_string(CtlFormula::Op op);

enum class Backend { serial, parallel };

struct FixpointStats {
  std::size_t fixpoints = 0;
  std::size_t max_iterations = 0;
};

/// States of k satisfying f (always a subset of k.states()). Fixpoints are
/// iterated from ∅ (least) or k.states() (greatest) until the set is stable.
StateSet denote(const KripkeStructure& k, const CtlFormula& f, Backend backend = Backend::parallel);
StateSet denote(const KripkeStructure& k, const CtlFormula& f, Backend backend, FixpointStats& stats);

/// k ⊢ f
bool check(const KripkeStructure& k, const CtlFormula& f, Backend backend = Backend::parallel);

}  // namespace atcalc
