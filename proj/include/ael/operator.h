// The derivation operator D_T on explicit belief pairs, its least fixpoint,
// and autoepistemic models.

#ifndef AEL_OPERATOR_H_
#define AEL_OPERATOR_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ael/formula.h"
#include "ael/truth.h"
#include "ael/worlds.h"

namespace ael {

// A broken internal invariant.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// D_T(B) = ({I | B,I weakly satisfies T}, {I | B,I strongly satisfies T}).
BeliefPair der(const Theory& theory, const BeliefPair& pair);

struct FixpointTrace {
  // ⊥, D(⊥), ..., lfp. The last element is a fixpoint; all earlier ones are
  // strictly below their successor.
  std::vector<BeliefPair> pairs;
  // Top-level modal literals of the theory.
  std::vector<Formula> literals;
  // values[k][j] = H_{pairs[k]}(literals[j]).
  std::vector<std::vector<TruthValue>> values;

  const BeliefPair& fixpoint() const { return pairs.back(); }
  // Number of strict steps, pairs.size() - 1.
  std::size_t iterations() const { return pairs.size() - 1; }
};

// Iterates der from ⊥ over an `atoms`-atom alphabet. Throws CapExceeded
// above the explicit-set cap.
FixpointTrace lfp_der(const Theory& theory, std::size_t atoms);

// W = {I : (W,I) |= T}, checked with Moore's evaluation.
bool is_autoepistemic_model(const Theory& theory, const WorldSet& w);

struct AutoepistemicModel {
  WorldSet worlds;
  // (W,W) is a fixpoint of der; always true, recorded for reporting.
  bool complete_fixpoint = false;
};

constexpr std::size_t kEnumerationAtomCap = 4;

// All autoepistemic models, by trying every W ⊆ A. Also checks that the
// models are exactly the W with (W) a fixpoint of der, throwing
// InternalError otherwise. Throws CapExceeded above kEnumerationAtomCap atoms.
std::vector<AutoepistemicModel> enumerate_autoepistemic_models(const Theory& theory,
                                                               std::size_t atoms);

// All W with (W) a fixpoint of der, by trying every W ⊆ A (2^2^n candidates).
std::vector<WorldSet> complete_fixpoints_brute_force(const Theory& theory, std::size_t atoms);

// All W with (W) a fixpoint of der, by guessing 2-valued values for the
// top-level modal literals: each guess fixes a K-free theory whose models are
// the only candidate W, and the candidate is kept iff der((W)) = (W).
// Costs 2^|literals| guesses instead of 2^2^n.
std::vector<WorldSet> complete_fixpoints(const Theory& theory, std::size_t atoms);

// H_{lfp}(K(F)): t means F is in every consistent stable expansion, f that it
// is in none.
TruthValue skeptical_value(const Theory& theory, const Formula& f, std::size_t atoms);

}  // namespace ael

#endif  // AEL_OPERATOR_H_
