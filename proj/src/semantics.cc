#include "ael/semantics.h"

#include <stdexcept>
#include <string>

namespace ael {

namespace {

void check_alphabet(const Formula& f, std::size_t atoms) {
  if (f.atom_bound() > atoms)
    throw std::out_of_range("formula mentions atom " + std::to_string(f.atom_bound() - 1) +
                            " outside a " + std::to_string(atoms) + "-atom alphabet");
}

// Kleene connectives over a recursive evaluator for the operands.
template <typename Rec>
TruthValue kleene(const Formula& f, Interpretation i, Rec&& rec) {
  switch (f.op()) {
    case Op::kAtom:
      return from_bool(value_of(i, f.atom_id()));
    case Op::kTrue:
      return TruthValue::kTrue;
    case Op::kFalse:
      return TruthValue::kFalse;
    case Op::kUnknown:
      return TruthValue::kUnknown;
    case Op::kNot:
      return inverse(rec(f.lhs()));
    case Op::kAnd:
      return truth_min(rec(f.lhs()), rec(f.rhs()));
    case Op::kOr:
      return truth_max(rec(f.lhs()), rec(f.rhs()));
    case Op::kImplies:
      return implies(rec(f.lhs()), rec(f.rhs()));
    case Op::kKnow:
      break;
  }
  throw std::logic_error("kleene() called on a modal atom");
}

}  // namespace

TruthValue eval_objective(const Formula& f, Interpretation i) {
  if (f.op() == Op::kKnow) throw std::invalid_argument("eval_objective on a modal formula");
  return kleene(f, i, [i](const Formula& g) { return eval_objective(g, i); });
}

bool holds(const Formula& f, Interpretation i) {
  switch (f.op()) {
    case Op::kAtom:
      return value_of(i, f.atom_id());
    case Op::kTrue:
      return true;
    case Op::kFalse:
      return false;
    case Op::kNot:
      return !holds(f.lhs(), i);
    case Op::kAnd:
      return holds(f.lhs(), i) && holds(f.rhs(), i);
    case Op::kOr:
      return holds(f.lhs(), i) || holds(f.rhs(), i);
    case Op::kImplies:
      return !holds(f.lhs(), i) || holds(f.rhs(), i);
    case Op::kUnknown:
    case Op::kKnow:
      break;
  }
  throw std::invalid_argument("holds() needs a K-free formula without $u");
}

TruthValue BeliefEvaluator::eval(Interpretation i, const Formula& f) {
  if (f.op() == Op::kKnow) return modal_atom(f.lhs());
  return kleene(f, i, [&](const Formula& g) { return eval(i, g); });
}

TruthValue BeliefEvaluator::modal_atom(const Formula& f) {
  if (auto it = known_.find(f); it != known_.end()) return it->second;
  check_alphabet(f, pair_.atoms());

  bool all_true = true;
  pair_.possible().for_each([&](Interpretation j) {
    if (all_true && eval(j, f) != TruthValue::kTrue) all_true = false;
  });
  TruthValue v = TruthValue::kUnknown;
  if (all_true) {
    v = TruthValue::kTrue;
  } else {
    bool some_false = false;
    pair_.certain().for_each([&](Interpretation j) {
      if (!some_false && eval(j, f) == TruthValue::kFalse) some_false = true;
    });
    if (some_false) v = TruthValue::kFalse;
  }
  known_.emplace(f, v);
  return v;
}

bool WorldEvaluator::eval(Interpretation i, const Formula& f) {
  switch (f.op()) {
    case Op::kKnow:
      return modal_atom(f.lhs());
    case Op::kNot:
      return !eval(i, f.lhs());
    case Op::kAnd:
      return eval(i, f.lhs()) && eval(i, f.rhs());
    case Op::kOr:
      return eval(i, f.lhs()) || eval(i, f.rhs());
    case Op::kImplies:
      return !eval(i, f.lhs()) || eval(i, f.rhs());
    case Op::kAtom:
      return value_of(i, f.atom_id());
    case Op::kTrue:
      return true;
    case Op::kFalse:
      return false;
    case Op::kUnknown:
      break;
  }
  throw std::invalid_argument("$u has no value in a possible-world structure");
}

bool WorldEvaluator::modal_atom(const Formula& f) {
  if (auto it = known_.find(f); it != known_.end()) return it->second;
  check_alphabet(f, worlds_.atoms());
  bool all = true;
  worlds_.for_each([&](Interpretation j) {
    if (all && !eval(j, f)) all = false;
  });
  known_.emplace(f, all);
  return all;
}

TruthValue eval(const BeliefPair& b, Interpretation i, const Formula& f) {
  check_alphabet(f, b.atoms());
  return BeliefEvaluator(b).eval(i, f);
}

TruthValue eval_modal_atom(const BeliefPair& b, const Formula& f) {
  return BeliefEvaluator(b).modal_atom(f);
}

bool eval_pws(const WorldSet& w, Interpretation i, const Formula& f) {
  check_alphabet(f, w.atoms());
  return WorldEvaluator(w).eval(i, f);
}

bool theory_contains(const WorldSet& w, const Formula& f) {
  check_alphabet(f, w.atoms());
  WorldEvaluator ev(w);
  bool all = true;
  w.for_each([&](Interpretation i) {
    if (all && !ev.eval(i, f)) all = false;
  });
  return all;
}

}  // namespace ael
