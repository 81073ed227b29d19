// Propositional (2-FOL) satisfiability and entailment.
//
// Formulas are turned into clauses by a definitional transformation and
// decided by a DPLL procedure. Variable v (1-based, DIMACS style) stands for
// atom v-1; variables above ClauseSet::original_vars are definition atoms.

#ifndef AEL_PROVER_H_
#define AEL_PROVER_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ael/formula.h"
#include "ael/worlds.h"

namespace ael {

using Lit = int;

struct ClauseSet {
  std::size_t original_vars = 0;
  std::size_t num_vars = 0;
  // Each clause is sorted, duplicate-free and non-tautological.
  std::vector<std::vector<Lit>> clauses;
};

// Equisatisfiable clauses for a K-free, $u-free formula (or a conjunction of
// them). Models restricted to the original variables are exactly the models
// of the input. Throws std::invalid_argument on K or $u.
ClauseSet to_clauses(const Formula& f);
ClauseSet to_clauses(const Theory& conjuncts);

std::string to_dimacs(const ClauseSet& cs);

// Pluggable decision procedure.
class SatBackend {
 public:
  virtual ~SatBackend() = default;
  // A satisfying assignment indexed by variable (index 0 unused), or nullopt.
  virtual std::optional<std::vector<bool>> solve(const ClauseSet& cs) const = 0;
};

// Unit propagation over two watched literals, chronological backtracking.
class DpllSolver final : public SatBackend {
 public:
  std::optional<std::vector<bool>> solve(const ClauseSet& cs) const override;
};

class Prover {
 public:
  Prover();
  explicit Prover(std::shared_ptr<const SatBackend> backend);

  bool satisfiable(const ClauseSet& cs) const;

  // premises |= conclusion, i.e. premises ∪ {~conclusion} is unsatisfiable.
  // Counts one call.
  bool entails(const Theory& premises, const Formula& conclusion);

  std::uint64_t entailment_calls() const { return calls_.load(std::memory_order_relaxed); }
  void reset_calls() { calls_.store(0, std::memory_order_relaxed); }

 private:
  std::shared_ptr<const SatBackend> backend_;
  std::atomic<std::uint64_t> calls_{0};
};

// Process-wide prover used when callers do not bring their own.
Prover& default_prover();

// Mod(U) over an `atoms`-atom alphabet, by enumeration. Throws CapExceeded
// above the explicit-set cap.
WorldSet models(const Theory& premises, std::size_t atoms);

}  // namespace ael

#endif  // AEL_PROVER_H_
