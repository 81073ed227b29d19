#include "ael/effective.h"

#include <algorithm>

#include "ael/semantics.h"

namespace ael {

bool EntailmentOracle::entails(const Theory& premises, const Formula& conclusion) {
  const Formula goal = simplify(conclusion);
  if (goal.op() == Op::kTrue) return true;
  for (const auto& p : premises)
    if (p.op() == Op::kFalse) return true;
  if (premises.empty() && goal.op() == Op::kFalse) return false;
  // Premises that failed to entail anything are consistent.
  if (goal.op() == Op::kFalse && consistent_.contains(premises)) return false;

  auto key = std::make_pair(premises, goal);
  if (auto it = answers_.find(key); it != answers_.end()) return it->second;
  const bool result = prover_.entails(premises, goal);
  if (!result) consistent_.insert(premises);
  answers_.emplace(std::move(key), result);
  return result;
}

Formula truth_constant(TruthValue v) {
  switch (v) {
    case TruthValue::kTrue:
      return Formula::truth();
    case TruthValue::kFalse:
      return Formula::falsity();
    case TruthValue::kUnknown:
      break;
  }
  return Formula::unknown();
}

ThreeFolValuation::ThreeFolValuation(const ThreeFolTheory& y, EntailmentOracle& oracle)
    : upper_(simplify(oath(y))), lower_(simplify(uath(y))), oracle_(oracle) {}

TruthValue ThreeFolValuation::decide_objective(const Formula& objective) {
  // t: oath(Y) |- uath(F); f: uath(Y) |/- oath(F)
  const bool t = oracle_.entails(upper_, uath(objective));
  if (t && !verify_) return TruthValue::kTrue;
  const bool f = !oracle_.entails(lower_, oath(objective));
  if (t && f) throw InternalError("H_Y is both t and f");
  if (t) return TruthValue::kTrue;
  return f ? TruthValue::kFalse : TruthValue::kUnknown;
}

TruthValue ThreeFolValuation::modal_atom(const Formula& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;

  std::optional<TruthValue> earlier;
  if (decided_) {
    if (auto it = decided_->find(f); it != decided_->end()) earlier = it->second;
  }
  TruthValue v;
  if (earlier && !verify_) {
    v = *earlier;
  } else {
    const Formula objective = substitute_top_level(
        f, [this](const Formula& k) { return truth_constant(modal_atom(k.lhs())); });
    v = decide_objective(objective);
    if (earlier && *earlier != v)
      throw InternalError("a decided modal literal changed value between iterations");
  }
  if (decided_ && is_two_valued(v)) decided_->emplace(f, v);
  memo_.emplace(f, v);
  return v;
}

TruthValue eval_modal_atom_3fol(const ThreeFolTheory& y, const Formula& f, Prover& prover) {
  EntailmentOracle oracle(prover);
  ThreeFolValuation valuation(y, oracle);
  return valuation.modal_atom(f);
}

namespace {

ThreeFolTheory substitute(const Theory& theory, const std::vector<Formula>& literals,
                          const std::vector<TruthValue>& values) {
  ThreeFolTheory out;
  out.reserve(theory.size());
  for (const auto& f : theory) {
    out.push_back(substitute_top_level(f, [&](const Formula& k) {
      const auto pos = std::find(literals.begin(), literals.end(), k) - literals.begin();
      return truth_constant(values[static_cast<std::size_t>(pos)]);
    }));
  }
  return out;
}

std::vector<TruthValue> literal_values(ThreeFolValuation& valuation,
                                       const std::vector<Formula>& literals) {
  std::vector<TruthValue> out;
  out.reserve(literals.size());
  for (const auto& k : literals) out.push_back(valuation.modal_atom(k.lhs()));
  return out;
}

}  // namespace

ThreeFolTheory instance_3fol(const Theory& theory, const ThreeFolTheory& y, Prover& prover) {
  EntailmentOracle oracle(prover);
  ThreeFolValuation valuation(y, oracle);
  const auto literals = top_level_modal_literals(theory);
  return substitute(theory, literals, literal_values(valuation, literals));
}

ThreeFolTheory instance_bp(const Theory& theory, const BeliefPair& pair) {
  BeliefEvaluator ev(pair);
  const auto literals = top_level_modal_literals(theory);
  std::vector<TruthValue> values;
  for (const auto& k : literals) values.push_back(ev.modal_atom(k.lhs()));
  return substitute(theory, literals, values);
}

ThreeFolTheory sder(const Theory& theory, const ThreeFolTheory& y, Prover& prover) {
  return instance_3fol(theory, y, prover);
}

BeliefPair bel(const ThreeFolTheory& y, std::size_t atoms) {
  WorldSet upper = models(oath(y), atoms);
  WorldSet lower = models(uath(y), atoms);
  if (!lower.is_subset_of(upper)) throw InternalError("Mod(uath Y) is not a subset of Mod(oath Y)");
  return BeliefPair(std::move(upper), std::move(lower));
}

SderTrace lfp_sder(const Theory& theory, Prover& prover, SderOptions options) {
  const std::uint64_t calls_before = prover.entailment_calls();
  EntailmentOracle oracle(prover);
  std::unordered_map<Formula, TruthValue, FormulaHash> decided;

  SderTrace trace;
  trace.literals = top_level_modal_literals(theory);
  trace.theories.push_back({Formula::unknown()});

  auto values_of = [&](const ThreeFolTheory& y) {
    ThreeFolValuation valuation(y, oracle);
    valuation.seed(&decided, options.verify_invariants);
    return literal_values(valuation, trace.literals);
  };

  trace.values.push_back(values_of(trace.theories.back()));
  while (true) {
    ThreeFolTheory next = substitute(theory, trace.literals, trace.values.back());
    if (next == trace.theories.back()) break;
    std::vector<TruthValue> next_values = values_of(next);
    const bool stable = next_values == trace.values.back();
    trace.theories.push_back(std::move(next));
    trace.values.push_back(std::move(next_values));
    if (stable) break;
  }
  trace.entailment_calls = prover.entailment_calls() - calls_before;
  return trace;
}

std::uint64_t entailment_call_bound(const Theory& theory) {
  const std::uint64_t m = top_level_modal_literals(theory).size();
  return 2 * (m + 1) * m * theory.size();
}

}  // namespace ael
