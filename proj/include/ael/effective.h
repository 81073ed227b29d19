// 3-FOL theories as compact belief pairs, and the entailment-driven operator
// SDER whose iteration from {$u} computes the least fixpoint of D_T without
// enumerating interpretations.

#ifndef AEL_EFFECTIVE_H_
#define AEL_EFFECTIVE_H_

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ael/formula.h"
#include "ael/operator.h"
#include "ael/prover.h"
#include "ael/truth.h"
#include "ael/worlds.h"

namespace ael {

// K-free theory over Σ ∪ {$t, $f, $u}.
using ThreeFolTheory = Theory;

// Answers to 2-FOL entailment queries, keyed by the constant-folded query.
// Queries decidable from constants alone never reach the prover, and neither
// do consistency queries (conclusion $f) about premises already seen to be
// consistent.
class EntailmentOracle {
 public:
  explicit EntailmentOracle(Prover& prover) : prover_(prover) {}

  // `premises` must already be simplified (see simplify(const Theory&)).
  bool entails(const Theory& premises, const Formula& conclusion);

  Prover& prover() { return prover_; }

 private:
  Prover& prover_;
  std::map<std::pair<Theory, Formula>, bool> answers_;
  std::set<Theory> consistent_;
};

// H_Y(K(F)) for one fixed Y, memoized per modal subformula.
class ThreeFolValuation {
 public:
  ThreeFolValuation(const ThreeFolTheory& y, EntailmentOracle& oracle);

  // Value of K(f). Inner modal atoms are replaced by their constants first.
  TruthValue modal_atom(const Formula& f);

  // Values already known to be t or f from an earlier, ≤_p-smaller Y are
  // reused instead of recomputed. With `verify`, they are recomputed and a
  // change raises InternalError.
  void seed(std::unordered_map<Formula, TruthValue, FormulaHash>* decided, bool verify) {
    decided_ = decided;
    verify_ = verify;
  }

 private:
  TruthValue decide_objective(const Formula& objective);

  Theory upper_;  // simplified oath(Y)
  Theory lower_;  // simplified uath(Y)
  EntailmentOracle& oracle_;
  std::unordered_map<Formula, TruthValue, FormulaHash> memo_;
  std::unordered_map<Formula, TruthValue, FormulaHash>* decided_ = nullptr;
  bool verify_ = false;
};

Formula truth_constant(TruthValue v);

TruthValue eval_modal_atom_3fol(const ThreeFolTheory& y, const Formula& f,
                                Prover& prover = default_prover());

// T_Y: every top-level K(G) of T replaced by the constant H_Y(K(G)).
ThreeFolTheory instance_3fol(const Theory& theory, const ThreeFolTheory& y,
                             Prover& prover = default_prover());

// T_B: every top-level K(G) of T replaced by the constant H_B(K(G)).
ThreeFolTheory instance_bp(const Theory& theory, const BeliefPair& pair);

// SDER_T(Y) = T_Y
ThreeFolTheory sder(const Theory& theory, const ThreeFolTheory& y,
                    Prover& prover = default_prover());

// Bel(Y) = (Mod(oath Y), Mod(uath Y)). Throws CapExceeded above the cap and
// InternalError if Mod(uath Y) ⊄ Mod(oath Y).
BeliefPair bel(const ThreeFolTheory& y, std::size_t atoms);

struct SderOptions {
  // Recompute decided literal values each step and check they never change,
  // and check that the t and f cases of H_Y never both hold.
  bool verify_invariants = false;
};

struct SderTrace {
  // {$u}, SDER({$u}), ..., fixpoint representation.
  std::vector<ThreeFolTheory> theories;
  // Top-level modal literals of T.
  std::vector<Formula> literals;
  // values[k][j] = H_{theories[k]}(literals[j]).
  std::vector<std::vector<TruthValue>> values;
  std::uint64_t entailment_calls = 0;

  const ThreeFolTheory& fixpoint() const { return theories.back(); }
  std::size_t iterations() const { return theories.size() - 1; }
};

// Iterates SDER_T from {$u} until the literal value vector repeats.
SderTrace lfp_sder(const Theory& theory, Prover& prover = default_prover(),
                   SderOptions options = {});

// 2 (M+1) M |T| with M the number of top-level modal literals.
std::uint64_t entailment_call_bound(const Theory& theory);

}  // namespace ael

#endif  // AEL_EFFECTIVE_H_
