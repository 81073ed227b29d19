// Evaluation of modal formulas in belief pairs (3-valued) and in
// possible-world structures (2-valued).

#ifndef AEL_SEMANTICS_H_
#define AEL_SEMANTICS_H_

#include <unordered_map>

#include "ael/formula.h"
#include "ael/truth.h"
#include "ael/worlds.h"

namespace ael {

// Kleene value of a K-free formula in a 2-valued interpretation; the
// constants evaluate to themselves. Throws std::invalid_argument on K.
TruthValue eval_objective(const Formula& f, Interpretation i);

// 2-valued value of a K-free, $u-free formula.
bool holds(const Formula& f, Interpretation i);

// H_{B,I}. Caches the value of every modal atom it meets, so one Evaluator
// should be reused across interpretations for the same pair.
class BeliefEvaluator {
 public:
  explicit BeliefEvaluator(const BeliefPair& pair) : pair_(pair) {}

  TruthValue eval(Interpretation i, const Formula& f);
  // H_B(K(f)); does not depend on an interpretation.
  TruthValue modal_atom(const Formula& f);

  const BeliefPair& pair() const { return pair_; }

 private:
  const BeliefPair& pair_;
  std::unordered_map<Formula, TruthValue, FormulaHash> known_;
};

// Moore's H_{W,I}.
class WorldEvaluator {
 public:
  explicit WorldEvaluator(const WorldSet& worlds) : worlds_(worlds) {}

  bool eval(Interpretation i, const Formula& f);
  bool modal_atom(const Formula& f);

 private:
  const WorldSet& worlds_;
  std::unordered_map<Formula, bool, FormulaHash> known_;
};

// All of these throw std::out_of_range when f mentions an atom outside the
// alphabet of the pair or world set.
TruthValue eval(const BeliefPair& b, Interpretation i, const Formula& f);
TruthValue eval_modal_atom(const BeliefPair& b, const Formula& f);
bool eval_pws(const WorldSet& w, Interpretation i, const Formula& f);

// F ∈ Th(W)
bool theory_contains(const WorldSet& w, const Formula& f);

}  // namespace ael

#endif  // AEL_SEMANTICS_H_
