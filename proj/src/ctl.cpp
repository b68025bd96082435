#include "atcalc/ctl.hpp"

#include "atcalc/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace atcalc {

CtlFormula CtlFormula::atom(StateSet s) {
  CtlFormula f;
  f.op_ = Op::atom;
  f.atom_ = std::move(s);
  return f;
}

CtlFormula CtlFormula::unary(Op op, CtlFormula g) {
  CtlFormula f;
  f.op_ = op;
  f.operands_.push_back(std::move(g));
  return f;
}

CtlFormula CtlFormula::negation(CtlFormula g) { return unary(Op::negation, std::move(g)); }

CtlFormula CtlFormula::conjunction(CtlFormula a, CtlFormula b) {
  CtlFormula f;
  f.op_ = Op::conjunction;
  f.operands_.push_back(std::move(a));
  f.operands_.push_back(std::move(b));
  return f;
}

CtlFormula CtlFormula::disjunction(CtlFormula a, CtlFormula b) {
  CtlFormula f = conjunction(std::move(a), std::move(b));
  f.op_ = Op::disjunction;
  return f;
}

CtlFormula CtlFormula::eu(CtlFormula hold, CtlFormula goal) {
  CtlFormula f = conjunction(std::move(hold), std::move(goal));
  f.op_ = Op::eu;
  return f;
}

std::string to_string(CtlFormula::Op op) {
  switch (op) {
    case CtlFormula::Op::atom: return "atom";
    case CtlFormula::Op::negation: return "not";
    case CtlFormula::Op::conjunction: return "and";
    case CtlFormula::Op::disjunction: return "or";
    case CtlFormula::Op::ex: return "EX";
    case CtlFormula::Op::ax: return "AX";
    case CtlFormula::Op::ef: return "EF";
    case CtlFormula::Op::af: return "AF";
    case CtlFormula::Op::eg: return "EG";
    case CtlFormula::Op::ag: return "AG";
    case CtlFormula::Op::eu: return "EU";
  }
  return "?";
}

namespace {

class Evaluator {
 public:
  Evaluator(const KripkeStructure& k, Backend backend, FixpointStats& stats)
      : k_(k), ts_(k.system()), backend_(backend), stats_(stats) {}

  StateSet eval(const CtlFormula& f) {
    using Op = CtlFormula::Op;
    const auto& args = f.operands();
    switch (f.op()) {
      case Op::atom:
        if (f.atom_set().universe() != ts_.size())
          throw std::invalid_argument("CTL atom does not range over the Kripke structure's system");
        return f.atom_set() & k_.states();
      case Op::negation: return k_.states() - eval(args[0]);
      case Op::conjunction: return eval(args[0]) & eval(args[1]);
      case Op::disjunction: return eval(args[0]) | eval(args[1]);
      case Op::ex: return pre_exists(eval(args[0]));
      case Op::ax: return pre_forall(eval(args[0]));
      case Op::ef: {
        const StateSet g = eval(args[0]);
        return least([&](const StateSet& z) { return g | pre_exists(z); });
      }
      case Op::af: {
        const StateSet g = eval(args[0]);
        return least([&](const StateSet& z) { return g | pre_forall(z); });
      }
      case Op::eg: {
        const StateSet g = eval(args[0]);
        return greatest([&](const StateSet& z) { return g & pre_exists(z); });
      }
      case Op::ag: {
        const StateSet g = eval(args[0]);
        return greatest([&](const StateSet& z) { return g & pre_forall(z); });
      }
      case Op::eu: {
        const StateSet hold = eval(args[0]);
        const StateSet goal = eval(args[1]);
        return least([&](const StateSet& z) { return goal | (hold & pre_exists(z)); });
      }
    }
    throw std::logic_error("unhandled CTL operator");
  }

 private:
  StateSet pre_exists(const StateSet& target) {
    return backend_ == Backend::serial ? kernels::serial::pre_exists(ts_, k_.states(), target)
                                       : kernels::parallel::pre_exists(ts_, k_.states(), target);
  }
  StateSet pre_forall(const StateSet& target) {
    return backend_ == Backend::serial ? kernels::serial::pre_forall(ts_, k_.states(), target)
                                       : kernels::parallel::pre_forall(ts_, k_.states(), target);
  }

  template <class Step>
  StateSet iterate(StateSet z, Step step) {
    std::size_t rounds = 0;
    for (;;) {
      StateSet next = step(z);
      if (next == z) break;
      ++rounds;
      z = std::move(next);
    }
    ++stats_.fixpoints;
    stats_.max_iterations = std::max(stats_.max_iterations, rounds);
    return z;
  }
  template <class Step>
  StateSet least(Step step) {
    return iterate(StateSet(ts_.size()), step);
  }
  template <class Step>
  StateSet greatest(Step step) {
    return iterate(k_.states(), step);
  }

  const KripkeStructure& k_;
  const TransitionSystem& ts_;
  Backend backend_;
  FixpointStats& stats_;
};

}  // namespace

StateSet denote(const KripkeStructure& k, const CtlFormula& f, Backend backend, FixpointStats& stats) {
  return Evaluator(k, backend, stats).eval(f);
}

StateSet denote(const KripkeStructure& k, const CtlFormula& f, Backend backend) {
  FixpointStats stats;
  return denote(k, f, backend, stats);
}

bool check(const KripkeStructure& k, const CtlFormula& f, Backend backend) {
  return holds(k, denote(k, f, backend));
}

}  // namespace atcalc
